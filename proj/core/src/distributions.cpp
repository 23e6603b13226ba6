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

#include "ccgeom/distributions.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace ccgeom::distributions {

Distribution euclidean(int n) {
  return Distribution("euclidean:" + std::to_string(n), n, n,
                      [n](const Vector&) { return Matrix::Identity(n, n); }, 0.0);
}

Distribution coordinate_plane(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("plane rank must lie in [1, n]");
  return Distribution("plane:" + std::to_string(k) + "-of-" + std::to_string(n), n, k,
                      [k, n](const Vector&) { return Matrix::Identity(n, k); }, 0.0);
}

Distribution heisenberg() {
  return Distribution("heisenberg", 3, 2, [](const Vector& p) {
    Matrix f(3, 2);
    f << 1.0, 0.0,
         0.0, 1.0,
         -0.5 * p[1], 0.5 * p[0];
    return f;
  });
}

Distribution martinet() {
  return Distribution("martinet", 3, 2, [](const Vector& p) {
    Matrix f(3, 2);
    f << 1.0, 0.0,
         0.0, 1.0,
         0.0, p[0] * p[0];
    return f;
  });
}

namespace {

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) {
    throw std::invalid_argument("bad integer in distribution spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Distribution parse(std::string_view spec) {
  if (spec == "heisenberg") return heisenberg();
  if (spec == "martinet") return martinet();
  if (spec.starts_with("euclidean:")) return euclidean(parse_positive(spec.substr(10), spec));
  if (spec.starts_with("plane:")) {
    const std::string_view body = spec.substr(6);
    const auto sep = body.find("-of-");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("plane spec must read plane:k-of-n, got '" + std::string(spec) + "'");
    }
    return coordinate_plane(parse_positive(body.substr(0, sep), spec),
                            parse_positive(body.substr(sep + 4), spec));
  }
  throw std::invalid_argument("unknown distribution '" + std::string(spec) + "'");
}

}  // namespace ccgeom::distributions
