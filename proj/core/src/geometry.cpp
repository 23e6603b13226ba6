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

#include "ccgeom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "ccgeom/errors.hpp"

namespace ccgeom {

// ---------------------------------------------------------------- Domain

Domain::Domain(Vector lower, Vector upper, std::vector<int> grid_resolution)
    : lower_(std::move(lower)), upper_(std::move(upper)), grid_(std::move(grid_resolution)) {
  if (lower_.size() < 1 || lower_.size() != upper_.size()) {
    throw std::invalid_argument("domain bounds must share a positive dimension");
  }
  for (Eigen::Index i = 0; i < lower_.size(); ++i) {
    if (!(upper_[i] > lower_[i])) {
      throw std::invalid_argument("domain bounds are degenerate along axis " + std::to_string(i));
    }
  }
  if (grid_.empty()) grid_.assign(lower_.size(), 9);
  if (grid_.size() != static_cast<std::size_t>(lower_.size())) {
    throw std::invalid_argument("grid resolution must list one count per axis");
  }
}

Domain Domain::cube(int n, double half_width, int grid) {
  return Domain(Vector::Constant(n, -half_width), Vector::Constant(n, half_width),
                std::vector<int>(n, grid));
}

Domain Domain::with_grid(std::vector<int> grid) const { return Domain(lower_, upper_, std::move(grid)); }

bool Domain::contains(const Vector& p, double slack) const {
  if (p.size() != lower_.size()) return false;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!(p[i] >= lower_[i] - slack && p[i] <= upper_[i] + slack)) return false;
  }
  return true;
}

double Domain::min_width() const { return (upper_ - lower_).minCoeff(); }

// ----------------------------------------------------------- FinslerNorm

FinslerNorm::FinslerNorm(Kind kind, std::string name, Evaluator evaluator)
    : kind_(kind), name_(std::move(name)), evaluator_(std::move(evaluator)) {}

FinslerNorm FinslerNorm::euclidean() {
  return FinslerNorm(Kind::euclidean, "euclidean", nullptr);
}

FinslerNorm FinslerNorm::custom(std::string name, Evaluator evaluator) {
  if (!evaluator) throw std::invalid_argument("custom norm needs an evaluator");
  return FinslerNorm(Kind::custom, std::move(name), std::move(evaluator));
}

FinslerNorm FinslerNorm::frame(const Distribution& dist) {
  return FinslerNorm(Kind::frame, "frame:" + dist.name(), [dist](const Vector& point, const Vector& v) {
    const Matrix f = dist.frame(point);
    const Eigen::ColPivHouseholderQR<Matrix> qr(f);
    if (qr.rank() < f.cols()) throw DegenerateFrameError(point, static_cast<int>(qr.rank()), dist.rank());
    const Vector coords = qr.solve(v);
    const Vector normal = v - f * coords;
    return std::sqrt(coords.squaredNorm() + normal.squaredNorm());
  });
}

double FinslerNorm::operator()(const Vector& point, const Vector& v) const {
  if (kind_ == Kind::euclidean) return v.norm();
  return evaluator_(point, v);
}

// ---------------------------------------------------------- Distribution

Distribution::Distribution(std::string name, int dimension, int rank, FrameFn frame,
                           std::optional<double> lipschitz_constant)
    : name_(std::move(name)),
      dimension_(dimension),
      rank_(rank),
      frame_(std::move(frame)),
      lipschitz_(lipschitz_constant) {
  if (dimension_ < 1 || rank_ < 1 || rank_ > dimension_) {
    throw std::invalid_argument("distribution rank must lie in [1, dimension]");
  }
  if (!frame_) throw std::invalid_argument("distribution needs a frame function");
}

Matrix Distribution::frame(const Vector& p) const {
  Matrix f = frame_(p);
  if (f.rows() != dimension_ || f.cols() != rank_) {
    throw std::logic_error("frame of '" + name_ + "' has the wrong shape");
  }
  return f;
}

Matrix Distribution::orthonormal_frame(const Vector& p) const { return orthonormal_basis(frame(p), p); }

double Distribution::require_lipschitz_constant() const {
  if (!lipschitz_) {
    throw std::logic_error("distribution '" + name_ + "' has no Lipschitz constant; estimate one first");
  }
  return *lipschitz_;
}

Distribution Distribution::with_lipschitz_constant(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("Lipschitz constant must be finite and >= 0");
  Distribution copy = *this;
  copy.lipschitz_ = c;
  return copy;
}

// ------------------------------------------------------------ projections

Matrix orthonormal_basis(const Matrix& frame, const Vector& at) {
  const Eigen::Index k = frame.cols();
  const double largest = frame.colwise().norm().maxCoeff();
  if (!(largest > 0.0) || !std::isfinite(largest)) {
    throw DegenerateFrameError(at, 0, static_cast<int>(k));
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(frame);
  const auto& r = qr.matrixR();
  int rank = 0;
  for (Eigen::Index i = 0; i < std::min(frame.rows(), k); ++i) {
    if (std::abs(r(i, i)) > kFrameRankTolerance * largest) ++rank;
  }
  if (rank < k) throw DegenerateFrameError(at, rank, static_cast<int>(k));
  Matrix q = qr.householderQ() * Matrix::Identity(frame.rows(), k);
  return q;
}

Vector project_onto_distribution(const Vector& p, const Vector& v, const Distribution& dist) {
  const Matrix q = dist.orthonormal_frame(p);
  return q * (q.transpose() * v);
}

namespace {

double projector_gap(const Matrix& qa, const Matrix& qb) {
  const Matrix diff = qa * qa.transpose() - qb * qb.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(diff, Eigen::EigenvaluesOnly);
  return std::min(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
}

}  // namespace

double subspace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("frames live in different dimensions");
  const Vector origin = Vector::Zero(a.rows());
  return projector_gap(orthonormal_basis(a, origin), orthonormal_basis(b, origin));
}

double estimate_distribution_lipschitz(const Distribution& dist, const Domain& domain) {
  const int n = domain.dimension();
  if (n != dist.dimension()) throw std::invalid_argument("domain and distribution dimensions differ");
  const auto& res = domain.grid_resolution();
  for (int r : res) {
    if (r < 2) throw std::invalid_argument("grid resolution must be at least 2 per axis");
  }

  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (int d = 0; d < n; ++d) {
    stride[d] = total;
    total *= static_cast<std::size_t>(res[d]);
  }

  Vector spacing(n);
  for (int d = 0; d < n; ++d) spacing[d] = (domain.upper()[d] - domain.lower()[d]) / (res[d] - 1);

  auto point_of = [&](std::size_t flat) {
    Vector p(n);
    for (int d = 0; d < n; ++d) {
      const auto idx = static_cast<double>((flat / stride[d]) % res[d]);
      p[d] = domain.lower()[d] + idx * spacing[d];
    }
    return p;
  };

  std::vector<Matrix> bases(total);
  for (std::size_t i = 0; i < total; ++i) bases[i] = dist.orthonormal_frame(point_of(i));

  double best = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    for (int d = 0; d < n; ++d) {
      if ((i / stride[d]) % res[d] + 1 >= static_cast<std::size_t>(res[d])) continue;
      const double ratio = projector_gap(bases[i], bases[i + stride[d]]) / spacing[d];
      best = std::max(best, ratio);
    }
  }
  return best * kLipschitzSafetyFactor;
}

// ---------------------------------------------------------- SampledCurve

void SampledCurve::push_back(double t, Vector x) {
  if (dimension_ == 0) dimension_ = static_cast<int>(x.size());
  if (x.size() != dimension_) throw MalformedCurveError("sample dimension does not match the curve");
  if (!std::isfinite(t) || !x.allFinite()) throw MalformedCurveError("non-finite curve sample");
  if (!times_.empty() && !(t > times_.back())) {
    throw MalformedCurveError("curve times must be strictly increasing");
  }
  times_.push_back(t);
  points_.push_back(std::move(x));
  segment_vectors_.emplace_back();
}

void SampledCurve::append(const SampledCurve& other) {
  std::size_t first = 0;
  if (!empty() && !other.empty() && other.time(0) <= end_time()) {
    // shared joint sample: its outgoing segment is other's first segment
    if (other.segment_vectors_.front()) segment_vectors_.back() = other.segment_vectors_.front();
    first = 1;
  }
  for (std::size_t i = first; i < other.size(); ++i) {
    push_back(other.time(i), other.point(i));
    segment_vectors_.back() = other.segment_vectors_[i];
  }
}

Vector SampledCurve::at(double t) const {
  if (empty()) throw MalformedCurveError("empty curve");
  const double slack = 1e-12 * std::max(1.0, std::abs(end_time()));
  if (t < start_time() - slack || t > end_time() + slack) {
    throw RangeError("time " + std::to_string(t) + " outside curve range");
  }
  if (t <= start_time()) return points_.front();
  if (t >= end_time()) return points_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  const std::size_t lo = hi - 1;
  const double s = (t - times_[lo]) / (times_[hi] - times_[lo]);
  return points_[lo] + s * (points_[hi] - points_[lo]);
}

void SampledCurve::set_segment_vector(std::size_t i, Vector v) {
  if (i + 1 >= size()) throw std::out_of_range("segment index out of range");
  segment_vectors_[i] = std::move(v);
}

const std::optional<Vector>& SampledCurve::segment_vector(std::size_t i) const {
  return segment_vectors_.at(i);
}

double SampledCurve::max_speed() const {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    best = std::max(best, (points_[i + 1] - points_[i]).norm() / (times_[i + 1] - times_[i]));
  }
  return best;
}

bool SampledCurve::within(const Domain& domain, double slack) const {
  return std::all_of(points_.begin(), points_.end(),
                     [&](const Vector& p) { return domain.contains(p, slack); });
}

double curve_length(const SampledCurve& curve, const FinslerNorm& norm) {
  if (curve.size() < 2) throw MalformedCurveError("curve length needs at least two samples");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const Vector& a = curve.point(i);
    const Vector& b = curve.point(i + 1);
    total += norm(0.5 * (a + b), b - a);
  }
  return total;
}

SampledCurve reparametrize_by_arclength(const SampledCurve& curve) {
  if (curve.size() < 2) throw MalformedCurveError("cannot re-parametrize fewer than two samples");
  SampledCurve out(curve.dimension());
  double s = 0.0;
  out.push_back(0.0, curve.point(0));
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const double step = (curve.point(i) - curve.point(i - 1)).norm();
    if (step == 0.0) continue;
    s += step;
    out.push_back(s, curve.point(i));
  }
  if (out.size() < 2) throw MalformedCurveError("curve has zero length");
  return out;
}

HorizontalityReport horizontality_check(const SampledCurve& curve, const Distribution& dist, double tol) {
  if (curve.size() < 2) throw MalformedCurveError("horizontality check needs at least two samples");
  HorizontalityReport report;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const Vector u = curve.point(i + 1) - curve.point(i);
    const double len = u.norm();
    if (len == 0.0) {
      ++report.skipped_segments;
      continue;
    }
    const Vector mid = 0.5 * (curve.point(i) + curve.point(i + 1));
    const double dev = (u - project_onto_distribution(mid, u, dist)).norm() / len;
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > tol) report.offending_segments.push_back(i);
  }
  return report;
}

}  // namespace ccgeom
