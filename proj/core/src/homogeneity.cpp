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

#include "ccgeom/homogeneity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "ccgeom/errors.hpp"

namespace ccgeom {
namespace {

constexpr int kMaxDrawAttempts = 8;

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

/// Largest r with the closed sup-ball of radius r around 0 inside the box.
double inner_radius(const Domain& domain) {
  const Vector zero = Vector::Zero(domain.dimension());
  if (!domain.contains(zero)) throw std::invalid_argument("domain must contain the origin");
  return std::min((-domain.lower()).minCoeff(), domain.upper().minCoeff());
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, const Domain& domain) : rng_(seed), domain_(domain) {}

  Vector in_box() {
    Vector x(domain_.dimension());
    for (int i = 0; i < x.size(); ++i) x(i) = domain_.lower()(i) + uniform_(rng_) * (domain_.upper()(i) - domain_.lower()(i));
    return x;
  }

  Vector direction() {
    Vector u(domain_.dimension());
    do {
      for (int i = 0; i < u.size(); ++i) u(i) = normal_(rng_);
    } while (u.norm() < 1e-12);
    return u / u.norm();
  }

  double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, uniform_(rng_)); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_;
  std::normal_distribution<double> normal_;
  const Domain& domain_;
};

/// Alternates uniform box samples with radial samples of log-uniform size.
std::vector<Vector> sample_parameters(Sampler& s, int count, double min_radius, double radius) {
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) out.push_back(s.in_box());
    else out.push_back(s.log_uniform(min_radius, radius) * s.direction());
  }
  return out;
}

double max_at_small_scale(const std::vector<ModulusSample>& samples, double scale, bool relative, bool& found) {
  double worst = 0.0;
  found = false;
  for (const ModulusSample& s : samples) {
    if (s.scale > scale || s.scale <= 0.0) continue;
    found = true;
    worst = std::max(worst, relative ? s.value / s.scale : s.value);
  }
  return worst;
}

}  // namespace

HypothesisReport check_family_hypotheses(const DiffeoFamily& family, const MetricOracle& d, const Domain& domain,
                                         const HypothesisSampling& sampling, const HypothesisThresholds& thresholds) {
  if (family.dimension() != domain.dimension()) throw std::invalid_argument("family and domain dimensions differ");
  if (sampling.parameters < 1 || sampling.pairs_per_parameter < 0 || sampling.metric_samples < 0) {
    throw std::invalid_argument("sampling counts must be non-negative with at least one parameter");
  }
  const double radius = inner_radius(domain);
  if (!(sampling.min_radius > 0.0) || sampling.min_radius >= radius) {
    throw std::invalid_argument("min_radius must lie in (0, inner radius of the domain)");
  }
  Sampler s(sampling.seed, domain);
  const std::vector<Vector> params = sample_parameters(s, sampling.parameters, sampling.min_radius, radius);
  family.validate_base_point(params);

  HypothesisReport report;
  report.jacobian_step = family.jacobian_step();
  report.analytic_jacobian = family.analytic_jacobian();
  const int n = family.dimension();
  const Vector zero = Vector::Zero(n);
  const Matrix j00 = family.jacobian(zero, zero);

  // Rejection sampling of x (and y = x + r u) with all of x, y, f_p(x), f_p(y)
  // in the domain; every rejected draw is counted as skipped.
  const auto draw_pair = [&](const Vector& p, const auto& scale, std::size_t& rejected, Vector& x, Vector& y, Vector& fx,
                             Vector& fy) {
    const Vector u = s.direction();
    const double r = scale();
    for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
      x = s.in_box();
      y = x + r * u;
      if (domain.contains(y)) {
        fx = family(p, x);
        fy = family(p, y);
        if (domain.contains(fx) && domain.contains(fy)) return true;
      }
      ++rejected;
    }
    return false;
  };

  for (const Vector& p : params) {
    const Matrix j0p = family.jacobian(p, zero);
    report.df0_continuity.push_back({p.norm(), operator_norm(j00 - j0p)});
    for (int k = 0; k < sampling.pairs_per_parameter; ++k) {
      const Vector u = s.direction();
      const double r = s.log_uniform(sampling.min_radius, radius);

      const Vector yw = r * u;
      report.omega_samples.push_back({r, (j0p * yw + p - family(p, yw)).norm()});

      Vector x;
      Vector y;
      Vector fx;
      Vector fy;
      if (!draw_pair(p, [&] { return r; }, report.skipped, x, y, fx, fy)) continue;
      const double ratio = (fx - fy).norm() / (x - y).norm();
      report.k_euclidean = std::max({report.k_euclidean, ratio, 1.0 / ratio});
      report.eta_samples.push_back({(x - y).norm(), operator_norm(family.jacobian(p, x) - family.jacobian(p, y))});
    }
  }

  for (int m = 0; m < sampling.metric_samples; ++m) {
    const Vector& p = params[static_cast<std::size_t>(m) % params.size()];
    Vector x;
    Vector y;
    Vector fx;
    Vector fy;
    const auto scale = [&] { return s.uniform(0.25 * radius, 0.5 * radius); };
    if (!draw_pair(p, scale, report.metric_skipped, x, y, fx, fy)) continue;
    try {
      const double ratio = d(fx, fy) / d(x, y);
      if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        ++report.metric_skipped;
        continue;
      }
      report.k_metric = std::max({report.k_metric, ratio, 1.0 / ratio});
      ++report.metric_evaluated;
    } catch (const UnreachableError&) {
      ++report.metric_skipped;
    }
  }
  report.k_emp = std::max(report.k_euclidean, report.k_metric);

  bool eta_found = false;
  bool df0_found = false;
  bool omega_found = false;
  report.eta_small = max_at_small_scale(report.eta_samples, thresholds.small_scale, false, eta_found);
  report.df0_small = max_at_small_scale(report.df0_continuity, thresholds.small_scale, false, df0_found);
  report.omega_ratio_small = max_at_small_scale(report.omega_samples, thresholds.small_scale, true, omega_found);
  report.bilipschitz_ok = std::isfinite(report.k_emp) && report.k_emp <= thresholds.max_k;
  report.eta_ok = eta_found && report.eta_small <= thresholds.max_eta;
  report.df0_ok = df0_found && report.df0_small <= thresholds.max_df0_gap;
  report.omega_ok = omega_found && report.omega_ratio_small <= thresholds.max_omega_ratio;
  return report;
}

OmegaEnvelope distortion_modulus(const DiffeoFamily& family, const Domain& domain,
                                 const DistortionSampling& sampling) {
  if (family.dimension() != domain.dimension()) throw std::invalid_argument("family and domain dimensions differ");
  if (sampling.radii < 3 || sampling.parameters < 1 || sampling.directions < 1) {
    throw std::invalid_argument("distortion sampling needs at least 3 radii, 1 parameter and 1 direction");
  }
  const double radius = inner_radius(domain);
  if (!(sampling.min_radius > 0.0) || sampling.min_radius >= radius) {
    throw std::invalid_argument("min_radius must lie in (0, inner radius of the domain)");
  }
  Sampler s(sampling.seed, domain);
  const std::vector<Vector> params = sample_parameters(s, sampling.parameters, sampling.min_radius, radius);
  std::vector<Vector> dirs;
  for (int i = 0; i < sampling.directions; ++i) dirs.push_back(s.direction());

  OmegaEnvelope out;
  out.advisory = !family.analytic_jacobian();
  const Vector zero = Vector::Zero(family.dimension());
  std::vector<Matrix> j0;
  for (const Vector& p : params) j0.push_back(family.jacobian(p, zero));

  double running = 0.0;
  for (int i = 0; i < sampling.radii; ++i) {
    const double t = sampling.min_radius * std::pow(radius / sampling.min_radius,
                                                    static_cast<double>(i) / (sampling.radii - 1));
    for (std::size_t k = 0; k < params.size(); ++k) {
      for (const Vector& u : dirs) {
        const Vector y = t * u;
        running = std::max(running, (j0[k] * y + params[k] - family(params[k], y)).norm());
      }
    }
    out.radii.push_back(t);
    out.envelope.push_back(running);
    const double ratio = running / t;
    out.ratios.push_back(ratio < kOmegaRatioFloor ? 0.0 : ratio);
  }
  const double r1 = out.ratios[0];
  const double r2 = out.ratios[1];
  const double r3 = out.ratios[2];
  out.passed = r1 <= r2 && r2 <= r3 && (r3 == 0.0 || r1 < r3);
  return out;
}

Distribution push_forward_distribution(const DiffeoFamily& family, const Matrix& frame0) {
  const int n = family.dimension();
  if (frame0.rows() != n) throw std::invalid_argument("base frame has the wrong number of rows");
  orthonormal_basis(frame0, Vector::Zero(n));
  return Distribution("pushforward:" + family.name(), n, static_cast<int>(frame0.cols()),
                      [family, frame0, n](const Vector& p) -> Matrix {
                        Matrix f = family.jacobian(p, Vector::Zero(n)) * frame0;
                        orthonormal_basis(f, p);
                        return f;
                      });
}

ChainReport chain_transport(const DiffeoFamily& family, const Vector& p, double radius, const MetricOracle& d,
                            double k_emp) {
  const double step = p.norm();
  if (p.size() != family.dimension()) throw std::invalid_argument("chain step has the wrong dimension");
  if (!(step > 0.0)) throw std::invalid_argument("chain step must be non-zero");
  if (!(radius > 0.0) || !(k_emp >= 1.0)) throw std::invalid_argument("chain needs R > 0 and k >= 1");

  ChainReport report;
  const Vector zero = Vector::Zero(family.dimension());
  report.segment_distance = d(zero, p);
  report.step_bound = 4.0 * k_emp * radius / step;
  report.endpoints.push_back(zero);
  const double min_advance = step / (4.0 * k_emp);
  int stalled = 0;
  Vector e = zero;
  while (e.norm() < radius * (1.0 - 1e-12)) {
    const Vector next = family(e, p);
    if (next.norm() - e.norm() < min_advance) {
      if (++stalled == 3) {
        std::ostringstream os;
        os << "chain transport stalled near " << format_point(next) << " after " << report.steps + 1 << " steps";
        throw StagnationError(os.str(), report.steps + 1);
      }
    } else {
      stalled = 0;
    }
    e = next;
    report.endpoints.push_back(e);
    ++report.steps;
  }
  report.length_bound = k_emp * report.steps * report.segment_distance;
  report.passed = report.steps <= report.step_bound;
  return report;
}

}  // namespace ccgeom
