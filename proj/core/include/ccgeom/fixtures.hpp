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

#include <string_view>

#include "ccgeom/geometry.hpp"

namespace ccgeom::fixtures {

struct CircleLiftSpec {
  double radius = 0.5;
  double center_x = 0.5;
  double start_angle = 3.14159265358979323846;
  double sweep = 1.5 * 3.14159265358979323846;
  std::size_t samples = 2001;
};

/// Unit-speed horizontal lift to the Heisenberg chart of the planar arc
/// (cx + r cos phi, r sin phi), phi from start_angle through start_angle + sweep.
/// The vertical coordinate is the closed-form signed area term.
SampledCurve heisenberg_circle_lift(const CircleLiftSpec& spec = {});

/// Integral curve of sum_i c_i X_i from p over [0, duration], RK4 with
/// `samples - 1` equal steps.
SampledCurve frame_field_curve(const Distribution& dist, const Vector& p, const Vector& coefficients, double duration,
                               std::size_t samples);

/// Arc of the unit circle from angle 0 to pi/2, sampled at `samples` points
/// with time equal to the angle.
SampledCurve quarter_circle(std::size_t samples);

/// Resolves "heisenberg-circle-lift" and "quarter-circle".
SampledCurve named_curve(std::string_view name);

}  // namespace ccgeom::fixtures
