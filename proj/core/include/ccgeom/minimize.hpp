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

#include <functional>

#include "ccgeom/geometry.hpp"

namespace ccgeom {

/// Objective returning f(x); fills *gradient when it is non-null.
using SmoothObjective = std::function<double(const Vector& x, Vector* gradient)>;

struct MinimizeOptions {
  int max_iterations = 200;
  /// Stop when |grad|_inf <= gradient_tol * max(1, |f|).
  double gradient_tol = 1e-10;
};

struct MinimizeResult {
  Vector x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// BFGS on the inverse Hessian with Armijo backtracking. Falls back to a
/// steepest-descent restart when a quasi-Newton direction fails to descend.
MinimizeResult minimize_bfgs(const SmoothObjective& objective, Vector x0,
                             const MinimizeOptions& options = {});

}  // namespace ccgeom
