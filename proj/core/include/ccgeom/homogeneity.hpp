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

// Numerical checks of the hypotheses on a family of maps f_p: uniform
// biLipschitz bounds, moduli of the Jacobians, the distortion modulus, the
// push-forward of a subspace at the origin and chain transport.

#pragma once

#include <cstdint>
#include <vector>

#include "ccgeom/cc_metric.hpp"
#include "ccgeom/families.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom {

struct HypothesisSampling {
  int parameters = 16;
  int pairs_per_parameter = 8;
  /// Triples that also evaluate the metric oracle (two oracle calls each).
  int metric_samples = 16;
  /// Smallest |x - y|, |y| and |p| drawn; scales are log-uniform up to the
  /// largest ball around 0 inside the domain.
  double min_radius = 1e-3;
  std::uint64_t seed = 0;
};

/// User-declared pass thresholds.
struct HypothesisThresholds {
  double max_k = 4.0;
  /// Moduli are judged on samples at scale <= small_scale.
  double small_scale = 0.1;
  double max_eta = 0.25;
  double max_df0_gap = 0.25;
  /// Bound on omega(|y|) / |y|.
  double max_omega_ratio = 0.25;
};

struct ModulusSample {
  double scale = 0.0;
  double value = 0.0;
};

struct HypothesisReport {
  /// max(k_euclidean, k_metric)
  double k_emp = 1.0;
  double k_euclidean = 1.0;
  double k_metric = 1.0;
  /// (|x - y|, |(df_p)_x - (df_p)_y|)
  std::vector<ModulusSample> eta_samples;
  /// (|p|, |(df_0)_0 - (df_p)_0|)
  std::vector<ModulusSample> df0_continuity;
  /// (|y|, |(df_p)_0 y + f_p(0) - f_p(y)|)
  std::vector<ModulusSample> omega_samples;
  /// Draws rejected because a point or its image left the domain; each
  /// sample is redrawn up to 8 times before it is dropped.
  std::size_t skipped = 0;
  std::size_t metric_evaluated = 0;
  /// Rejected draws plus oracle failures.
  std::size_t metric_skipped = 0;
  double jacobian_step = 0.0;
  bool analytic_jacobian = false;

  double eta_small = 0.0;
  double df0_small = 0.0;
  double omega_ratio_small = 0.0;
  bool bilipschitz_ok = false;
  bool eta_ok = false;
  bool df0_ok = false;
  bool omega_ok = false;

  bool passed() const { return bilipschitz_ok && eta_ok && df0_ok && omega_ok; }
};

/// The domain must contain the origin. Samples whose images leave the domain
/// are skipped and counted; so are metric evaluations the oracle rejects.
HypothesisReport check_family_hypotheses(const DiffeoFamily& family, const MetricOracle& d, const Domain& domain,
                                         const HypothesisSampling& sampling = {},
                                         const HypothesisThresholds& thresholds = {});

struct DistortionSampling {
  int radii = 10;
  double min_radius = 1e-3;
  int parameters = 8;
  int directions = 8;
  std::uint64_t seed = 0;
};

struct OmegaEnvelope {
  /// Increasing geometric grid of |y|.
  std::vector<double> radii;
  /// Running maximum of the sampled deviation; non-decreasing.
  std::vector<double> envelope;
  /// envelope / radius, with values below kOmegaRatioFloor reported as 0
  std::vector<double> ratios;
  /// envelope / radius shrinks over the three smallest radii.
  bool passed = false;
  /// Set when the Jacobian is a finite-difference estimate.
  bool advisory = false;
};

inline constexpr double kOmegaRatioFloor = 1e-9;

OmegaEnvelope distortion_modulus(const DiffeoFamily& family, const Domain& domain,
                                 const DistortionSampling& sampling = {});

/// frame(p) = (df_p)_0 * frame0. Rank loss raises DegenerateFrameError at p.
Distribution push_forward_distribution(const DiffeoFamily& family, const Matrix& frame0);

struct ChainReport {
  /// 0, f_0(p), ... up to the first endpoint outside the ball.
  std::vector<Vector> endpoints;
  int steps = 0;
  double segment_distance = 0.0;
  /// k * steps * d(p, 0)
  double length_bound = 0.0;
  /// 4 k R / |p|
  double step_bound = 0.0;
  bool passed = false;
};

/// Throws StagnationError when the endpoint fails to move outward by
/// |p| / (4 k) on three consecutive steps.
ChainReport chain_transport(const DiffeoFamily& family, const Vector& p, double radius, const MetricOracle& d,
                            double k_emp);

}  // namespace ccgeom
