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

#include "ccgeom/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccgeom/errors.hpp"

namespace ccgeom {

void FlowConfig::validate() const {
  if (!(step > 0.0)) throw std::invalid_argument("flow step must be positive");
  if (!(step <= max_duration)) throw std::invalid_argument("flow step exceeds max duration");
}

Vector rk4_step(const VectorField& field, const Vector& x, double h) {
  const Vector k1 = field(x);
  const Vector k2 = field(x + 0.5 * h * k1);
  const Vector k3 = field(x + 0.5 * h * k2);
  const Vector k4 = field(x + h * k3);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

FlowResult integrate_projected_field(const Vector& p, const Vector& v, double duration,
                                     const Distribution& dist, const FlowConfig& cfg,
                                     double start_time) {
  cfg.validate();
  if (!(duration > 0.0)) throw std::invalid_argument("flow duration must be positive");
  if (duration > cfg.max_duration) throw std::invalid_argument("flow duration exceeds max_duration");
  if (p.size() != dist.dimension() || v.size() != dist.dimension()) {
    throw std::invalid_argument("flow point/vector dimension does not match the distribution");
  }
  if (!v.allFinite()) throw std::invalid_argument("flow vector must be finite");
  if (cfg.domain && !cfg.domain->contains(p)) throw RangeError("flow start " + format_point(p) + " outside domain");

  const VectorField field = [&](const Vector& x) { return project_onto_distribution(x, v, dist); };
  const auto steps = static_cast<long>(std::ceil(duration / cfg.step - 1e-9));
  const double h = duration / static_cast<double>(steps);

  FlowResult out;
  out.curve = SampledCurve(static_cast<int>(p.size()));
  out.curve.push_back(start_time, p);
  Vector x = p;
  for (long i = 0; i < steps; ++i) {
    const double t = start_time + static_cast<double>(i) * h;
    try {
      x = rk4_step(field, x, h);
    } catch (const DegenerateFrameError& e) {
      throw e.at_time(t - start_time);
    }
    const double t_next = i + 1 == steps ? start_time + duration : t + h;
    if (cfg.domain && !cfg.domain->contains(x)) {
      out.exited_domain = true;
      out.exit_time = t_next;
      break;
    }
    out.curve.push_back(t_next, x);
  }
  return out;
}

DeviationReport deviation_certificate(const SampledCurve& gamma, const Vector& p, const Vector& v,
                                      const Distribution& dist, double lipschitz_constant) {
  if (gamma.size() < 2) throw MalformedCurveError("deviation certificate needs at least two samples");
  const Vector initial = project_onto_distribution(p, v, dist);
  const double t0 = gamma.start_time();
  DeviationReport report;
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    const double t = gamma.time(i) - t0;
    const double residual = (gamma.point(i) - p - t * initial).norm();
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + p.norm() + t * v.norm()) * static_cast<double>(i);
    if (residual <= noise) continue;
    report.constant = std::max(report.constant, residual / (t * t));
  }
  report.threshold = kDeviationPassFactor * lipschitz_constant * v.norm();
  report.passed = report.constant <= report.threshold;
  return report;
}

SpeedReport speed_certificate(const SampledCurve& gamma, const Vector& v, double rel_tol) {
  if (gamma.size() < 2) throw MalformedCurveError("speed certificate needs at least two samples");
  const double speed = v.norm();
  SpeedReport report;
  if (speed == 0.0) {
    const double moved = curve_length(gamma);
    report.passed = moved == 0.0;
    report.max_chord_ratio = moved == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    report.length_ratio = report.max_chord_ratio;
    return report;
  }
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
    const double chord = (gamma.point(i + 1) - gamma.point(i)).norm();
    const double dt = gamma.time(i + 1) - gamma.time(i);
    report.max_chord_ratio = std::max(report.max_chord_ratio, chord / (speed * dt));
  }
  report.length_ratio = curve_length(gamma) / (speed * gamma.duration());
  report.passed = report.max_chord_ratio <= 1.0 + rel_tol && report.length_ratio <= 1.0 + rel_tol;
  return report;
}

}  // namespace ccgeom
