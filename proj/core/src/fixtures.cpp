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

#include "ccgeom/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ccgeom/flow.hpp"

namespace ccgeom::fixtures {

SampledCurve heisenberg_circle_lift(const CircleLiftSpec& spec) {
  if (spec.samples < 2 || !(spec.radius > 0.0) || !(spec.sweep > 0.0)) {
    throw std::invalid_argument("circle lift needs a positive radius, positive sweep and two samples");
  }
  const double r = spec.radius;
  const double total = r * spec.sweep;
  SampledCurve curve(3);
  for (std::size_t i = 0; i < spec.samples; ++i) {
    const double t = total * static_cast<double>(i) / static_cast<double>(spec.samples - 1);
    const double phi = spec.start_angle + t / r;
    Vector x(3);
    x(0) = spec.center_x + r * std::cos(phi);
    x(1) = r * std::sin(phi);
    x(2) = 0.5 * (r * t + spec.center_x * r * (std::sin(phi) - std::sin(spec.start_angle)));
    curve.push_back(t, x);
  }
  return curve;
}

SampledCurve frame_field_curve(const Distribution& dist, const Vector& p, const Vector& coefficients, double duration,
                               std::size_t samples) {
  if (samples < 2 || !(duration > 0.0)) throw std::invalid_argument("frame field curve needs duration > 0 and two samples");
  if (coefficients.size() != dist.rank()) throw std::invalid_argument("one coefficient per frame column expected");
  const VectorField field = [&](const Vector& x) -> Vector { return dist.frame(x) * coefficients; };
  const double h = duration / static_cast<double>(samples - 1);
  SampledCurve curve(dist.dimension());
  Vector x = p;
  curve.push_back(0.0, x);
  for (std::size_t i = 1; i < samples; ++i) {
    x = rk4_step(field, x, h);
    curve.push_back(i + 1 == samples ? duration : h * static_cast<double>(i), x);
  }
  return curve;
}

SampledCurve quarter_circle(std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("quarter circle needs two samples");
  SampledCurve curve(2);
  for (std::size_t i = 0; i < samples; ++i) {
    const double a = 0.5 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples - 1);
    Vector x(2);
    x << std::cos(a), std::sin(a);
    curve.push_back(a, x);
  }
  return curve;
}

SampledCurve named_curve(std::string_view name) {
  if (name == "heisenberg-circle-lift") return heisenberg_circle_lift();
  if (name == "quarter-circle") return quarter_circle(1000);
  throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

}  // namespace ccgeom::fixtures
