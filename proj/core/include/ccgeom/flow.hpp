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

// Integral curves of projected constant vectors, with their speed and
// second-order deviation certificates.

#pragma once

#include <functional>
#include <optional>

#include "ccgeom/geometry.hpp"

namespace ccgeom {

struct FlowConfig {
  /// Upper bound on the integrator step; the actual step divides the duration evenly.
  double step = 1e-3;
  double max_duration = 100.0;
  /// Curves are truncated and flagged when they leave this box.
  std::optional<Domain> domain;

  void validate() const;
};

using VectorField = std::function<Vector(const Vector&)>;

/// Classical fourth-order Runge-Kutta step.
Vector rk4_step(const VectorField& field, const Vector& x, double h);

struct FlowResult {
  SampledCurve curve;
  bool exited_domain = false;
  /// Time of the first sample outside the domain, when exited.
  std::optional<double> exit_time;
};

/// Integral curve of x -> proj_{D_x}(v) started at p, sampled at every
/// integrator step. Sample times run from start_time to start_time + duration.
/// Throws DegenerateFrameError (carrying the flow time) on rank collapse.
FlowResult integrate_projected_field(const Vector& p, const Vector& v, double duration,
                                     const Distribution& dist, const FlowConfig& cfg,
                                     double start_time = 0.0);

/// Pass factor over C |v| for the quadratic deviation constant.
inline constexpr double kDeviationPassFactor = 1.5;

struct DeviationReport {
  /// max over samples of |gamma(t) - p - t proj_p(v)| / t^2
  double constant = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Empirical second-order deviation of a flow line from its tangent line.
/// Residuals at the floating-point noise floor count as zero.
DeviationReport deviation_certificate(const SampledCurve& gamma, const Vector& p, const Vector& v,
                                      const Distribution& dist, double lipschitz_constant);

struct SpeedReport {
  /// max over segments of |chord| / (|v| dt)
  double max_chord_ratio = 0.0;
  /// Length(gamma) / (|v| T)
  double length_ratio = 0.0;
  bool passed = false;
};

/// Checks that a flow of v never moves faster than |v|, segment by segment.
SpeedReport speed_certificate(const SampledCurve& gamma, const Vector& v, double rel_tol = 1e-6);

}  // namespace ccgeom
