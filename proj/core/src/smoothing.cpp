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

#include "ccgeom/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccgeom {

Vector window_velocity(const SampledCurve& eta, double t0, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("window length must be positive");
  if (eta.empty()) throw MalformedCurveError("empty curve");
  const double slack = 1e-12 * std::max(1.0, std::abs(eta.end_time()));
  if (t0 < eta.start_time() - slack || t0 + eps > eta.end_time() + slack) {
    throw RangeError("window [" + std::to_string(t0) + ", " + std::to_string(t0 + eps) +
                     "] outside curve range");
  }
  return (eta.at(std::min(t0 + eps, eta.end_time())) - eta.at(t0)) / eps;
}

Vector select_horizontal_vector(const Vector& average, const Vector& p, const Distribution& dist) {
  return project_onto_distribution(p, average, dist);
}

double recursion_bound(double alpha, double beta, long n) {
  if (n < 1) throw std::invalid_argument("recursion index starts at 1");
  if (alpha < 0.0 || beta < 0.0) throw std::invalid_argument("recursion constants must be non-negative");
  if (alpha == 0.0) return 0.0;
  if (beta == 1.0) return static_cast<double>(n) * alpha;
  // (beta^n - 1) / (beta - 1) without cancellation near beta = 1
  const double growth = std::expm1(static_cast<double>(n) * std::log1p(beta - 1.0));
  return alpha * growth / (beta - 1.0);
}

namespace {

bool unit_speed(const SampledCurve& eta, double tol) {
  for (std::size_t i = 0; i + 1 < eta.size(); ++i) {
    const double speed = (eta.point(i + 1) - eta.point(i)).norm() / (eta.time(i + 1) - eta.time(i));
    if (std::abs(speed - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace

SmoothingResult smooth_horizontal_approximation(const SampledCurve& input, const Distribution& dist,
                                                const SmoothingConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("smoothing step must be positive");
  if (input.size() < 2) throw MalformedCurveError("smoothing needs at least two samples");
  if (input.dimension() != dist.dimension()) {
    throw std::invalid_argument("curve and distribution dimensions differ");
  }

  HorizontalityReport horizontal = horizontality_check(input, dist, cfg.horizontality_tol);
  if (!horizontal.passed()) {
    throw NotHorizontalError("input curve is not horizontal: max deviation " +
                                 std::to_string(horizontal.max_deviation),
                             std::move(horizontal));
  }

  const double lipschitz = dist.require_lipschitz_constant();
  SmoothingResult result;
  SmoothingCertificate& cert = result.certificate;
  cert.reparametrized = !unit_speed(input, cfg.speed_tol);
  const SampledCurve eta = cert.reparametrized ? reparametrize_by_arclength(input) : input;

  const double t_begin = eta.start_time();
  const double total = eta.duration();
  if (cfg.epsilon > total) throw std::invalid_argument("smoothing step exceeds the curve duration");
  const auto windows = static_cast<long>(std::ceil(total / cfg.epsilon - 1e-9));

  cert.epsilon = cfg.epsilon;
  cert.windows = static_cast<std::size_t>(windows);
  cert.lipschitz_constant = lipschitz;
  cert.alpha = 2.0 * lipschitz * cfg.epsilon * cfg.epsilon;
  cert.beta = 1.0 + cfg.epsilon * lipschitz;
  cert.predicted_error_bound = recursion_bound(cert.alpha, cert.beta, windows);
  cert.length_input = curve_length(eta);

  result.sigma = SampledCurve(eta.dimension());
  Vector here = eta.front();
  for (long n = 0; n < windows; ++n) {
    const double t0 = t_begin + static_cast<double>(n) * cfg.epsilon;
    const double width = n + 1 == windows ? eta.end_time() - t0 : cfg.epsilon;
    try {
      const Vector average = window_velocity(eta, t0, width);
      const Vector selected = select_horizontal_vector(average, here, dist);
      FlowResult piece = integrate_projected_field(here, selected, width, dist, cfg.flow, t0);
      for (std::size_t i = 0; i + 1 < piece.curve.size(); ++i) piece.curve.set_segment_vector(i, selected);
      result.sigma.append(piece.curve);
      result.pieces.push_back({here, selected, t0, width});
      cert.selected_vectors.push_back(selected);
      cert.selected_norms.push_back(selected.norm());
      cert.speed_cap = std::max(cert.speed_cap, selected.norm());
      if (piece.exited_domain) {
        throw RangeError("approximating curve left the domain at t = " + std::to_string(*piece.exit_time));
      }
      here = piece.curve.back();
    } catch (const Error& e) {
      throw SmoothingAbortedError(std::string("smoothing stopped in window ") + std::to_string(n) + ": " +
                                      e.what(),
                                  std::move(result));
    }
  }

  cert.endpoint_error = (eta.back() - result.sigma.back()).norm();
  cert.length_output = curve_length(result.sigma);
  cert.delta = cert.length_output / cert.length_input - 1.0;
  return result;
}

}  // namespace ccgeom
