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

// Piecewise-smooth approximation of Lipschitz horizontal curves.
//
// A unit-speed horizontal curve eta on [0, T] is replaced by a concatenation
// of N = ceil(T / eps) projected-field flow lines. Piece n starts at
// sigma(n eps) and flows the projection onto D_{sigma(n eps)} of the window
// average (eta((n+1) eps) - eta(n eps)) / eps. The endpoint gap obeys the
// recursion a_1 = alpha, a_n = beta a_{n-1} + alpha with alpha = 2 C eps^2
// and beta = 1 + C eps, where C is the Lipschitz constant of D.

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "ccgeom/errors.hpp"
#include "ccgeom/flow.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom {

struct SmoothingConfig {
  double epsilon = 1e-2;
  FlowConfig flow;
  /// Maximum horizontality deviation accepted on the input curve.
  double horizontality_tol = 1e-3;
  /// Inputs whose speed strays further than this from one are re-timed by arclength.
  double speed_tol = 1e-3;
};

struct SmoothingPiece {
  Vector start;
  Vector velocity;
  double start_time = 0.0;
  double duration = 0.0;
};

struct SmoothingCertificate {
  double epsilon = 0.0;
  std::size_t windows = 0;
  std::vector<Vector> selected_vectors;
  std::vector<double> selected_norms;
  double endpoint_error = 0.0;
  double length_input = 0.0;
  double length_output = 0.0;
  /// length_output / length_input - 1
  double delta = 0.0;
  double lipschitz_constant = 0.0;
  double alpha = 0.0;
  double beta = 1.0;
  double predicted_error_bound = 0.0;
  /// max_n |v_n|
  double speed_cap = 0.0;
  bool reparametrized = false;
};

struct SmoothingResult {
  SampledCurve sigma;
  std::vector<SmoothingPiece> pieces;
  SmoothingCertificate certificate;
};

class NotHorizontalError : public Error {
 public:
  NotHorizontalError(const std::string& what, HorizontalityReport report)
      : Error(what), report_(std::move(report)) {}
  const HorizontalityReport& report() const { return report_; }

 private:
  HorizontalityReport report_;
};

/// The construction stopped early; `partial()` holds the pieces built so far.
class SmoothingAbortedError : public Error {
 public:
  SmoothingAbortedError(const std::string& what, SmoothingResult partial)
      : Error(what), partial_(std::make_shared<SmoothingResult>(std::move(partial))) {}
  const SmoothingResult& partial() const { return *partial_; }

 private:
  std::shared_ptr<const SmoothingResult> partial_;
};

/// (eta(t0 + eps) - eta(t0)) / eps, the mean velocity over the window.
Vector window_velocity(const SampledCurve& eta, double t0, double eps);

/// Closest vector of D_p to `average`.
Vector select_horizontal_vector(const Vector& average, const Vector& p, const Distribution& dist);

/// n-th term of a_1 = alpha, a_k = beta a_{k-1} + alpha, in closed form.
double recursion_bound(double alpha, double beta, long n);

SmoothingResult smooth_horizontal_approximation(const SampledCurve& eta, const Distribution& dist,
                                                const SmoothingConfig& cfg);

}  // namespace ccgeom
