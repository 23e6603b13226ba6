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

#include "ccgeom_cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "ccgeom/errors.hpp"

namespace ccgeom::cli {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_curve_csv(std::ostream& os, const SampledCurve& curve) {
  os << 't';
  for (int i = 1; i <= curve.dimension(); ++i) os << ",x" << i;
  os << '\n';
  for (std::size_t k = 0; k < curve.size(); ++k) {
    os << format_double(curve.time(k));
    const Vector& x = curve.point(k);
    for (int i = 0; i < x.size(); ++i) os << ',' << format_double(x(i));
    os << '\n';
  }
}

void write_curve_csv(const std::filesystem::path& path, const SampledCurve& curve) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_curve_csv(os, curve);
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

SampledCurve read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw MalformedCurveError("empty curve file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string_view> header = split(line);
  const int n = static_cast<int>(header.size()) - 1;
  if (n < 1 || header[0] != "t") throw MalformedCurveError("curve header must read t,x1,...,xn");
  for (int i = 1; i <= n; ++i) {
    if (header[static_cast<std::size_t>(i)] != "x" + std::to_string(i)) {
      throw MalformedCurveError("curve header must read t,x1,...,xn");
    }
  }
  SampledCurve curve(n);
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string_view> cells = split(line);
    if (cells.size() != header.size()) {
      throw MalformedCurveError("row " + std::to_string(row) + " has " + std::to_string(cells.size()) + " cells");
    }
    std::vector<double> values(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto [ptr, ec] = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), values[i]);
      if (ec != std::errc() || ptr != cells[i].data() + cells[i].size()) {
        throw MalformedCurveError("row " + std::to_string(row) + ": bad number '" + std::string(cells[i]) + "'");
      }
    }
    curve.push_back(values[0], Eigen::Map<const Vector>(values.data() + 1, n));
  }
  return curve;
}

SampledCurve read_curve_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read curve file " + path.string());
  return read_curve_csv(is);
}

}  // namespace ccgeom::cli
