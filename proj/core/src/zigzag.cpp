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

#include "ccgeom/zigzag.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccgeom/errors.hpp"

namespace ccgeom {

Vector ZigzagSpec::target_velocity() const {
  Vector v = Vector::Zero(base.size());
  for (std::size_t j = 0; j < generators.size(); ++j) v += coefficients[j] * generators[j];
  return v;
}

namespace {

void validate(const ZigzagSpec& spec, const Distribution& dist) {
  if (spec.generators.empty()) throw std::invalid_argument("zigzag needs at least one generator");
  if (spec.generators.size() != spec.coefficients.size()) {
    throw std::invalid_argument("zigzag needs one coefficient per generator");
  }
  if (!(spec.epsilon > 0.0)) throw std::invalid_argument("zigzag switch period must be positive");
  if (!(spec.duration >= spec.epsilon)) throw std::invalid_argument("zigzag duration must be at least one period");
  if (spec.base.size() != dist.dimension()) throw std::invalid_argument("zigzag base has the wrong dimension");
  for (std::size_t j = 0; j < spec.generators.size(); ++j) {
    const Vector& w = spec.generators[j];
    if (w.size() != dist.dimension()) throw std::invalid_argument("zigzag generator has the wrong dimension");
    if (!std::isfinite(spec.coefficients[j])) throw std::invalid_argument("zigzag coefficients must be finite");
    const double off = (w - project_onto_distribution(spec.base, w, dist)).norm();
    if (off > kGeneratorTangencyTol * std::max(1.0, w.norm())) {
      throw std::invalid_argument("generator " + std::to_string(j) + " is not tangent to the distribution at " +
                                  format_point(spec.base));
    }
  }
}

}  // namespace

SampledCurve zigzag_curve(const ZigzagSpec& spec, const Distribution& dist, const FlowConfig& flow) {
  validate(spec, dist);

  std::vector<Vector> velocities;
  for (std::size_t j = 0; j < spec.generators.size(); ++j) {
    if (spec.coefficients[j] != 0.0) velocities.push_back(spec.coefficients[j] * spec.generators[j]);
  }
  const auto m = static_cast<double>(velocities.size());
  for (Vector& v : velocities) v *= m;

  const auto pieces = static_cast<long>(std::ceil(spec.duration / spec.epsilon - 1e-9));
  SampledCurve out(static_cast<int>(spec.base.size()));
  if (velocities.empty()) {
    // every coefficient vanishes: the curve rests at the base
    out.push_back(0.0, spec.base);
    out.push_back(spec.duration, spec.base);
    return out;
  }

  Vector here = spec.base;
  for (long n = 0; n < pieces; ++n) {
    const double t0 = static_cast<double>(n) * spec.epsilon;
    const double width = n + 1 == pieces ? spec.duration - t0 : spec.epsilon;
    const Vector& v = velocities[static_cast<std::size_t>(n) % velocities.size()];
    FlowResult piece = integrate_projected_field(here, v, width, dist, flow, t0);
    for (std::size_t i = 0; i + 1 < piece.curve.size(); ++i) piece.curve.set_segment_vector(i, v);
    out.append(piece.curve);
    if (piece.exited_domain) break;
    here = piece.curve.back();
  }
  return out;
}

ConvergenceReport tangent_convergence_check(ZigzagSpec spec, const Distribution& dist,
                                            const std::vector<double>& epsilons, const FlowConfig& flow,
                                            int grid_points) {
  if (epsilons.empty()) throw std::invalid_argument("need at least one switch period");
  if (!std::is_sorted(epsilons.rbegin(), epsilons.rend()) ||
      std::adjacent_find(epsilons.begin(), epsilons.end()) != epsilons.end()) {
    throw std::invalid_argument("switch periods must be strictly decreasing");
  }
  if (grid_points < 2) throw std::invalid_argument("need at least two grid points");

  const Vector v = spec.target_velocity();
  ConvergenceReport report;
  for (double eps : epsilons) {
    spec.epsilon = eps;
    const SampledCurve curve = zigzag_curve(spec, dist, flow);
    const double horizon = curve.end_time();
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double t = spec.duration * static_cast<double>(i) / (grid_points - 1);
      if (t > horizon) break;
      worst = std::max(worst, (curve.at(t) - spec.base - t * v).norm());
    }
    report.epsilons.push_back(eps);
    report.deviations.push_back(worst);
  }

  const auto& dev = report.deviations;
  const bool monotone = std::adjacent_find(dev.begin(), dev.end(), std::less<>()) == dev.end();
  report.passed = monotone && dev.back() <= 0.5 * dev.front();
  return report;
}

}  // namespace ccgeom
