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

#include "ccgeom/errors.hpp"

#include <sstream>

namespace ccgeom {

std::string format_point(const Eigen::VectorXd& p) {
  std::ostringstream out;
  out.precision(10);
  out << '(';
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i > 0) out << ", ";
    out << p[i];
  }
  out << ')';
  return out.str();
}

namespace {

std::string degenerate_message(const Eigen::VectorXd& p, int rank, int expected,
                               std::optional<double> t) {
  std::ostringstream out;
  out << "degenerate frame at " << format_point(p) << ": numerical rank " << rank
      << ", expected " << expected;
  if (t) out << " (flow time " << *t << ")";
  return out.str();
}

}  // namespace

DegenerateFrameError::DegenerateFrameError(Eigen::VectorXd point, int numerical_rank,
                                           int expected_rank, std::optional<double> time)
    : Error(degenerate_message(point, numerical_rank, expected_rank, time)),
      point_(std::move(point)),
      numerical_rank_(numerical_rank),
      expected_rank_(expected_rank),
      time_(time) {}

}  // namespace ccgeom
