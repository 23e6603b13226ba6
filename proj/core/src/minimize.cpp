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

#include "ccgeom/minimize.hpp"

#include <algorithm>
#include <cmath>

namespace ccgeom {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 40;

}  // namespace

MinimizeResult minimize_bfgs(const SmoothObjective& objective, Vector x0, const MinimizeOptions& options) {
  const Eigen::Index dim = x0.size();
  MinimizeResult out;
  out.x = std::move(x0);

  Vector grad(dim);
  double f = objective(out.x, &grad);
  ++out.evaluations;
  Matrix inv_hessian = Matrix::Identity(dim, dim);
  bool fresh = true;

  Vector trial_grad(dim);
  for (; out.iterations < options.max_iterations; ++out.iterations) {
    if (!std::isfinite(f)) break;
    if (grad.lpNorm<Eigen::Infinity>() <= options.gradient_tol * std::max(1.0, std::abs(f))) {
      out.converged = true;
      break;
    }

    Vector direction = -(inv_hessian * grad);
    double slope = grad.dot(direction);
    if (!(slope < 0.0)) {
      inv_hessian.setIdentity();
      direction = -grad;
      slope = -grad.squaredNorm();
      fresh = true;
    }

    double step = 1.0;
    if (fresh) step = std::min(1.0, 1.0 / std::max(1e-300, direction.lpNorm<Eigen::Infinity>()));
    Vector trial;
    double trial_f = f;
    bool accepted = false;
    for (int b = 0; b < kMaxBacktracks; ++b) {
      trial = out.x + step * direction;
      trial_f = objective(trial, nullptr);
      ++out.evaluations;
      if (std::isfinite(trial_f) && trial_f <= f + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (fresh) {
        out.converged = true;  // no descent along -grad at machine precision
        break;
      }
      inv_hessian.setIdentity();
      fresh = true;
      continue;
    }

    trial_f = objective(trial, &trial_grad);
    ++out.evaluations;
    const Vector s = trial - out.x;
    const Vector y = trial_grad - grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (fresh) {
        inv_hessian *= sy / y.squaredNorm();
        fresh = false;
      }
      const double rho = 1.0 / sy;
      const Vector hy = inv_hessian * y;
      inv_hessian += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
                     rho * (hy * s.transpose() + s * hy.transpose());
    }
    const bool stalled = std::abs(f - trial_f) <= 1e-16 * std::max(1.0, std::abs(f));
    out.x = std::move(trial);
    f = trial_f;
    grad = trial_grad;
    if (stalled) {
      out.converged = true;
      ++out.iterations;
      break;
    }
  }
  out.value = f;
  return out;
}

}  // namespace ccgeom
