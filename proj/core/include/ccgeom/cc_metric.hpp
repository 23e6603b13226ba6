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

// Carnot-Caratheodory distance estimates and two-sided metric comparison.
//
// The upper estimate is a direct transcription: controls are piecewise
// constant in frame coordinates over `segments` equal windows of unit total
// time, the trajectory x' = F(x) u is integrated with fourth-order
// Runge-Kutta, and the discrete energy is minimized under the endpoint
// constraint with an augmented-Lagrangian penalty schedule. Gradients come
// from the exact sensitivities of the discrete integrator (frame Jacobians
// by central differences), so only frame evaluations are required.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccgeom/errors.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom {

struct CCSolverConfig {
  int segments = 16;
  /// Runge-Kutta steps per control window during optimization.
  int substeps = 1;
  int restarts = 5;
  /// Quasi-Newton iterations per penalty subproblem.
  int max_iterations = 300;
  /// Multiplier updates before giving up on the endpoint constraint.
  int max_outer_iterations = 14;
  /// Penalty weights, escalated when the gap stops shrinking fast enough.
  /// Each weight is multiplied by max(1, 4 pi / norm(q - p)).
  std::vector<double> penalty_schedule{10.0, 100.0, 1000.0, 10000.0};
  std::uint64_t seed = 0;
  /// Accepted endpoint mismatch (Euclidean).
  double tolerance = 1e-6;
  /// Runge-Kutta steps per window in the reported path.
  int path_samples_per_segment = 16;

  void validate() const;
};

/// Stretch applied to the residual endpoint gap in the reported upper value.
inline constexpr double kGapStretchFactor = 3.0;

struct CCUpperResult {
  /// path_length + kGapStretchFactor * norm(gap)
  double value = 0.0;
  double path_length = 0.0;
  double endpoint_gap = 0.0;
  SampledCurve path;
  /// Index of the restart that produced the reported path.
  int restart = 0;
  /// Restarts actually run; stops early when the chord bound is attained.
  int restarts_run = 0;
};

struct CCInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// norm(p, q - p). A lower bound of the CC distance for norms that do not
/// depend on the base point.
double cc_chord_lower(const Vector& p, const Vector& q, const FinslerNorm& norm = FinslerNorm::euclidean());

/// Throws UnreachableError when no restart closes the endpoint gap.
CCUpperResult cc_distance_upper(const Vector& p, const Vector& q, const Distribution& dist,
                                const FinslerNorm& norm, const CCSolverConfig& cfg);

CCInterval cc_distance(const Vector& p, const Vector& q, const Distribution& dist, const FinslerNorm& norm,
                       const CCSolverConfig& cfg);

/// A distance function on chart points.
class MetricOracle {
 public:
  using Evaluator = std::function<double(const Vector&, const Vector&)>;

  MetricOracle(std::string name, Evaluator evaluator);

  double operator()(const Vector& p, const Vector& q) const { return evaluator_(p, q); }
  const std::string& name() const { return name_; }

  static MetricOracle euclidean();
  /// Upper values of cc_distance_upper.
  static MetricOracle carnot_caratheodory(Distribution dist, FinslerNorm norm, CCSolverConfig cfg);
  static MetricOracle scaled(double factor, MetricOracle inner);

 private:
  std::string name_;
  Evaluator evaluator_;
};

/// Resolves "euclidean", "cc:<distribution>" and "scaled:<factor>:<oracle>".
/// CC oracles use `norm` and `cfg`.
MetricOracle parse_metric(std::string_view spec, const FinslerNorm& norm, const CCSolverConfig& cfg);

struct BiLipReport {
  std::vector<std::pair<Vector, Vector>> pairs;
  /// d1 / d2 per evaluated pair
  std::vector<double> ratios;
  /// max over pairs of max(ratio, 1 / ratio)
  double l_emp = 1.0;
  /// Smallest Euclidean separation among evaluated pairs.
  double min_separation = 0.0;
  double requested_min_separation = 0.0;
  std::size_t skipped = 0;
};

/// More than a fifth of the pairs failed.
class CompareAbortedError : public Error {
 public:
  CompareAbortedError(const std::string& what, BiLipReport report)
      : Error(what), report_(std::make_shared<BiLipReport>(std::move(report))) {}
  const BiLipReport& report() const { return *report_; }

 private:
  std::shared_ptr<const BiLipReport> report_;
};

/// Samples n_pairs pairs in the domain with Euclidean separation drawn
/// log-uniformly from [min_sep, smallest box width] and compares the two
/// oracles on them. Deterministic for a fixed seed; the same seed reuses the
/// same midpoints, directions and separation quantiles for every min_sep.
BiLipReport compare_metrics(const MetricOracle& d1, const MetricOracle& d2, const Domain& domain, int n_pairs,
                            double min_sep, std::uint64_t seed);

}  // namespace ccgeom
