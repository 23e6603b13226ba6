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

#pragma once

#include <vector>

#include "ccgeom/flow.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom {

/// Alternating flow of m generators. Piece n (duration eps) flows the
/// projected field of m * a_j * w_j from the current point, j = n mod m, so
/// the time-averaged velocity is sum_j a_j w_j. Generators with a zero
/// coefficient take no turn.
struct ZigzagSpec {
  Vector base;
  std::vector<Vector> generators;
  std::vector<double> coefficients;
  double epsilon = 0.05;
  double duration = 1.0;

  /// sum_j a_j w_j
  Vector target_velocity() const;
};

/// Relative tolerance for accepting a generator as tangent to D at the base.
inline constexpr double kGeneratorTangencyTol = 1e-8;

SampledCurve zigzag_curve(const ZigzagSpec& spec, const Distribution& dist, const FlowConfig& flow);

struct ConvergenceReport {
  std::vector<double> epsilons;
  /// sup_t |sigma_eps(t) - base - t v| per epsilon, on a shared time grid
  std::vector<double> deviations;
  bool passed = false;
};

/// Runs the zigzag for each epsilon (decreasing) and measures the distance
/// to the line through the base with velocity sum_j a_j w_j. Passes when the
/// deviations never increase and the last is at most half the first.
ConvergenceReport tangent_convergence_check(ZigzagSpec spec, const Distribution& dist,
                                            const std::vector<double>& epsilons, const FlowConfig& flow,
                                            int grid_points = 401);

}  // namespace ccgeom
