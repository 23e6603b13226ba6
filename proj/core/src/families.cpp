// Copyright 2026 The ccgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccgeom/families.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ccgeom/errors.hpp"
#include "ccgeom/expression.hpp"

namespace ccgeom {

DiffeoFamily::DiffeoFamily(std::string name, int dimension, Map map, std::optional<JacobianFn> jacobian,
                           double jacobian_step)
    : name_(std::move(name)), dimension_(dimension), map_(std::move(map)), jacobian_(std::move(jacobian)),
      step_(jacobian_step) {
  if (dimension_ < 1) throw std::invalid_argument("family dimension must be positive");
  if (!map_) throw std::invalid_argument("family map is empty");
  if (!(step_ > 0.0) || !std::isfinite(step_)) throw std::invalid_argument("Jacobian step must be positive");
}

DiffeoFamily DiffeoFamily::with_jacobian_step(double step) const {
  return DiffeoFamily(name_, dimension_, map_, jacobian_, step);
}

Vector DiffeoFamily::operator()(const Vector& p, const Vector& x) const {
  if (p.size() != dimension_ || x.size() != dimension_) {
    throw std::invalid_argument("family " + name_ + ": argument dimension mismatch");
  }
  Vector y = map_(p, x);
  if (y.size() != dimension_ || !y.allFinite()) {
    throw std::domain_error("family " + name_ + ": non-finite image at x = " + format_point(x));
  }
  return y;
}

Matrix DiffeoFamily::jacobian(const Vector& p, const Vector& x) const {
  Matrix j;
  if (jacobian_) {
    j = (*jacobian_)(p, x);
  } else {
    j.resize(dimension_, dimension_);
    Vector xp = x;
    Vector xm = x;
    for (int c = 0; c < dimension_; ++c) {
      xp(c) = x(c) + step_;
      xm(c) = x(c) - step_;
      j.col(c) = ((*this)(p, xp) - (*this)(p, xm)) / (2.0 * step_);
      xp(c) = x(c);
      xm(c) = x(c);
    }
  }
  if (j.rows() != dimension_ || j.cols() != dimension_ || !j.allFinite()) {
    throw std::domain_error("family " + name_ + ": non-finite Jacobian at x = " + format_point(x));
  }
  return j;
}

double DiffeoFamily::base_point_defect(const std::vector<Vector>& parameters) const {
  double worst = 0.0;
  const Vector zero = Vector::Zero(dimension_);
  for (const Vector& p : parameters) worst = std::max(worst, ((*this)(p, zero) - p).norm());
  return worst;
}

void DiffeoFamily::validate_base_point(const std::vector<Vector>& parameters) const {
  const double defect = base_point_defect(parameters);
  if (defect > kBasePointTolerance) {
    std::ostringstream os;
    os << "family " << name_ << " violates f_p(0) = p (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }
}

namespace families {

DiffeoFamily translations(int n) {
  return DiffeoFamily(
      "translations:" + std::to_string(n), n, [](const Vector& p, const Vector& x) -> Vector { return x + p; },
      [n](const Vector&, const Vector&) -> Matrix { return Matrix::Identity(n, n); });
}

DiffeoFamily heisenberg_left() {
  return DiffeoFamily(
      "heisenberg-left", 3,
      [](const Vector& p, const Vector& x) -> Vector {
        Vector y = p + x;
        y(2) += 0.5 * (p(0) * x(1) - p(1) * x(0));
        return y;
      },
      [](const Vector& p, const Vector&) -> Matrix {
        Matrix j = Matrix::Identity(3, 3);
        j(2, 0) = -0.5 * p(1);
        j(2, 1) = 0.5 * p(0);
        return j;
      });
}

DiffeoFamily affine(Matrix a) {
  if (a.rows() != a.cols() || a.rows() < 1) throw std::invalid_argument("affine family needs a square matrix");
  const int n = static_cast<int>(a.rows());
  return DiffeoFamily(
      "affine", n, [a](const Vector& p, const Vector& x) -> Vector { return x + p + p.norm() * (a * x); },
      [a, n](const Vector& p, const Vector&) -> Matrix { return Matrix::Identity(n, n) + p.norm() * a; });
}

DiffeoFamily polynomial(std::string name, const std::vector<std::string>& components) {
  const int n = static_cast<int>(components.size());
  if (n < 1) throw std::invalid_argument("polynomial family needs at least one component");
  std::vector<std::string> variables;
  for (int i = 1; i <= n; ++i) variables.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) variables.push_back("p" + std::to_string(i));
  auto exprs = std::make_shared<std::vector<Expression>>();
  for (const std::string& c : components) exprs->push_back(Expression::parse(c, variables));
  return DiffeoFamily(std::move(name), n, [exprs, n](const Vector& p, const Vector& x) -> Vector {
    std::vector<double> values(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] = x(i);
      values[static_cast<std::size_t>(n + i)] = p(i);
    }
    Vector y(n);
    for (int i = 0; i < n; ++i) y(i) = (*exprs)[static_cast<std::size_t>(i)].evaluate(values);
    return y;
  });
}

namespace {

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::vector<double> row;
    std::size_t s = start;
    while (s <= end) {
      const std::size_t e = std::min(text.find(',', s), end);
      std::string_view item = text.substr(s, e - s);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw std::invalid_argument("bad matrix entry '" + std::string(item) + "'");
      }
      row.push_back(v);
      s = e + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("affine matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

}  // namespace

DiffeoFamily parse(std::string_view spec) {
  if (spec == "heisenberg-left") return heisenberg_left();
  if (spec.starts_with("translations:")) {
    int n = 0;
    const std::string_view rest = spec.substr(13);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 1) {
      throw std::invalid_argument("bad family spec '" + std::string(spec) + "'");
    }
    return translations(n);
  }
  if (spec.starts_with("affine:")) return affine(parse_matrix(spec.substr(7)));
  throw std::invalid_argument("unknown family '" + std::string(spec) + "'");
}

}  // namespace families
}  // namespace ccgeom
