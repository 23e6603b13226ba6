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

#include "ccgeom/cc_metric.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/QR>

#include "ccgeom/distributions.hpp"
#include "ccgeom/flow.hpp"
#include "ccgeom/minimize.hpp"

namespace ccgeom {

void CCSolverConfig::validate() const {
  if (segments < 2) throw std::invalid_argument("solver needs at least two control segments");
  if (substeps < 1 || path_samples_per_segment < 1) throw std::invalid_argument("solver substeps must be positive");
  if (restarts < 1) throw std::invalid_argument("solver needs at least one restart");
  if (max_iterations < 1 || max_outer_iterations < 1) throw std::invalid_argument("solver budget must be positive");
  if (penalty_schedule.empty()) throw std::invalid_argument("penalty schedule is empty");
  for (double mu : penalty_schedule) {
    if (!(mu > 0.0)) throw std::invalid_argument("penalty weights must be positive");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
}

namespace {

using RowVector = Eigen::RowVectorXd;

constexpr std::array<double, 4> kStageOffset{0.0, 0.5, 0.5, 1.0};
constexpr std::array<double, 4> kStageWeight{1.0, 2.0, 2.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Piecewise-constant controls in frame coordinates on [0, 1].
class ControlProblem {
 public:
  ControlProblem(const Distribution& dist, const FinslerNorm& norm, Vector start, int segments, int substeps)
      : dist_(dist),
        norm_(norm),
        start_(std::move(start)),
        n_(dist.dimension()),
        k_(dist.rank()),
        own_frame_norm_(norm.kind() == FinslerNorm::Kind::frame && norm.name() == "frame:" + dist.name()),
        segments_(segments),
        substeps_(substeps) {}

  Eigen::Index size() const { return static_cast<Eigen::Index>(k_) * segments_; }
  const Vector& start() const { return start_; }

  struct Outcome {
    double energy = 0.0;
    Vector endpoint;
    RowVector energy_gradient;
    Matrix endpoint_jacobian;
  };

  /// Discrete energy sum h/6 sum_i w_i norm(y_i, k_i)^2 and endpoint of the
  /// Runge-Kutta trajectory, optionally with exact derivatives in u.
  void simulate(const Vector& u, Outcome& out, bool with_gradient) const {
    const double h = 1.0 / (static_cast<double>(segments_) * substeps_);
    const Eigen::Index dim = size();
    Vector x = start_;
    out.energy = 0.0;
    if (with_gradient) {
      out.endpoint_jacobian.setZero(n_, dim);
      out.energy_gradient.setZero(dim);
    }
    Matrix& dx = out.endpoint_jacobian;

    std::array<Vector, 4> kv;
    std::array<Matrix, 4> dk;
    for (int m = 0; m < segments_; ++m) {
      const Vector c = u.segment(static_cast<Eigen::Index>(m) * k_, k_);
      const Eigen::Index block = static_cast<Eigen::Index>(m) * k_;
      for (int s = 0; s < substeps_; ++s) {
        for (int i = 0; i < 4; ++i) {
          const Vector y = i == 0 ? x : Vector(x + kStageOffset[i] * h * kv[i - 1]);
          const Matrix frame = dist_.frame(y);
          kv[i] = frame * c;
          const double weight = kStageWeight[i] * h / 6.0;
          if (own_frame_norm_) {
            out.energy += weight * c.squaredNorm();
            if (with_gradient) out.energy_gradient.segment(block, k_) += 2.0 * weight * c.transpose();
          }
          if (!with_gradient) {
            if (own_frame_norm_) continue;
            const double speed = norm_(y, kv[i]);
            out.energy += weight * speed * speed;
            continue;
          }
          const Matrix dy = i == 0 ? dx : Matrix(dx + kStageOffset[i] * h * dk[i - 1]);
          dk[i] = field_jacobian(y, c) * dy;
          dk[i].middleCols(block, k_) += frame;
          if (own_frame_norm_) continue;
          double value = 0.0;
          RowVector d_point, d_velocity;
          norm_squared(y, kv[i], value, d_point, d_velocity);
          out.energy += weight * value;
          out.energy_gradient += weight * (d_point * dy + d_velocity * dk[i]);
        }
        x += (h / 6.0) * (kv[0] + 2.0 * kv[1] + 2.0 * kv[2] + kv[3]);
        if (with_gradient) dx += (h / 6.0) * (dk[0] + 2.0 * dk[1] + 2.0 * dk[2] + dk[3]);
      }
    }
    out.endpoint = std::move(x);
  }

  SampledCurve path(const Vector& u, int steps_per_segment) const {
    SampledCurve curve(n_);
    const double h = 1.0 / (static_cast<double>(segments_) * steps_per_segment);
    Vector x = start_;
    curve.push_back(0.0, x);
    for (int m = 0; m < segments_; ++m) {
      const Vector c = u.segment(static_cast<Eigen::Index>(m) * k_, k_);
      const VectorField field = [&](const Vector& y) -> Vector { return dist_.frame(y) * c; };
      for (int s = 0; s < steps_per_segment; ++s) {
        x = rk4_step(field, x, h);
        const long index = static_cast<long>(m) * steps_per_segment + s + 1;
        curve.push_back(static_cast<double>(index) * h, x);
        curve.set_segment_vector(curve.size() - 2, c);
      }
    }
    return curve;
  }

 private:
  Matrix field_jacobian(const Vector& y, const Vector& c) const {
    Matrix jac(n_, n_);
    Vector probe = y;
    for (int j = 0; j < n_; ++j) {
      const double step = 1e-6 * std::max(1.0, std::abs(y[j]));
      probe[j] = y[j] + step;
      const Vector plus = dist_.frame(probe) * c;
      probe[j] = y[j] - step;
      const Vector minus = dist_.frame(probe) * c;
      probe[j] = y[j];
      jac.col(j) = (plus - minus) / (2.0 * step);
    }
    return jac;
  }

  void norm_squared(const Vector& y, const Vector& v, double& value, RowVector& d_point,
                    RowVector& d_velocity) const {
    if (norm_.kind() == FinslerNorm::Kind::euclidean) {
      value = v.squaredNorm();
      d_point.setZero(n_);
      d_velocity = 2.0 * v.transpose();
      return;
    }
    auto sq = [&](const Vector& a, const Vector& b) {
      const double r = norm_(a, b);
      return r * r;
    };
    value = sq(y, v);
    d_point.resize(n_);
    d_velocity.resize(n_);
    Vector probe = y;
    for (int j = 0; j < n_; ++j) {
      const double step = 1e-6 * std::max(1.0, std::abs(y[j]));
      probe[j] = y[j] + step;
      const double plus = sq(probe, v);
      probe[j] = y[j] - step;
      const double minus = sq(probe, v);
      probe[j] = y[j];
      d_point[j] = (plus - minus) / (2.0 * step);
    }
    probe = v;
    for (int j = 0; j < n_; ++j) {
      const double step = 1e-6 * std::max(1.0, std::abs(v[j]));
      probe[j] = v[j] + step;
      const double plus = sq(y, probe);
      probe[j] = v[j] - step;
      const double minus = sq(y, probe);
      probe[j] = v[j];
      d_velocity[j] = (plus - minus) / (2.0 * step);
    }
  }

  const Distribution& dist_;
  const FinslerNorm& norm_;
  Vector start_;
  int n_;
  int k_;
  // norm(y, F(y) c) = |c| exactly
  bool own_frame_norm_;
  int segments_;
  int substeps_;
};

struct RestartOutcome {
  Vector controls;
  double gap = std::numeric_limits<double>::infinity();
};

/// Augmented-Lagrangian solve from one initial guess.
RestartOutcome solve_from(const ControlProblem& problem, const Vector& target, Vector controls,
                          const CCSolverConfig& cfg) {
  Vector multiplier = Vector::Zero(target.size());
  std::size_t stage = 0;
  // A loop enclosing a displacement of size r costs energy of order 4 pi r, while
  // the penalty on a collapsed path is of order r^2.
  const double scale = std::max(1.0, 4.0 * std::numbers::pi / std::max((target - problem.start()).norm(), 1e-12));
  double penalty = scale * cfg.penalty_schedule[0];
  double previous_gap = std::numeric_limits<double>::infinity();
  ControlProblem::Outcome sim;

  RestartOutcome best{controls, std::numeric_limits<double>::infinity()};
  const MinimizeOptions options{cfg.max_iterations, 1e-10};
  for (int outer = 0; outer < cfg.max_outer_iterations; ++outer) {
    const SmoothObjective objective = [&](const Vector& u, Vector* gradient) {
      ControlProblem::Outcome local;
      problem.simulate(u, local, gradient != nullptr);
      const Vector gap = local.endpoint - target;
      if (gradient) {
        const Vector pull = multiplier + penalty * gap;
        *gradient = local.energy_gradient.transpose() + local.endpoint_jacobian.transpose() * pull;
      }
      return local.energy + multiplier.dot(gap) + 0.5 * penalty * gap.squaredNorm();
    };
    controls = minimize_bfgs(objective, std::move(controls), options).x;
    problem.simulate(controls, sim, false);
    const Vector gap = sim.endpoint - target;
    const double gap_norm = gap.norm();
    if (gap_norm < best.gap || gap_norm <= cfg.tolerance) best = {controls, gap_norm};
    if (gap_norm <= cfg.tolerance) break;
    multiplier += penalty * gap;
    if (gap_norm > 0.25 * previous_gap && stage + 1 < cfg.penalty_schedule.size()) {
      penalty = scale * cfg.penalty_schedule[++stage];
    }
    previous_gap = gap_norm;
  }
  return best;
}

Vector initial_guess(int restart, const Vector& chord_controls, const Vector& p, const Vector& q, int rank,
                     int segments, std::mt19937_64& rng) {
  Vector u(static_cast<Eigen::Index>(rank) * segments);
  for (int m = 0; m < segments; ++m) u.segment(static_cast<Eigen::Index>(m) * rank, rank) = chord_controls;
  if (restart == 0) return u;

  // loops scaled like the perimeter enclosing an area of size |q - p|
  const double scale = 2.0 * std::sqrt(std::numbers::pi * std::max((q - p).norm(), 1e-12));
  if (restart <= 2 && rank >= 2) {
    const double orientation = restart == 1 ? 1.0 : -1.0;
    for (int m = 0; m < segments; ++m) {
      const double angle = 2.0 * std::numbers::pi * (m + 0.5) / segments;
      u[static_cast<Eigen::Index>(m) * rank] += scale * std::cos(angle);
      u[static_cast<Eigen::Index>(m) * rank + 1] += orientation * scale * std::sin(angle);
    }
    return u;
  }
  std::normal_distribution<double> normal(0.0, scale / std::sqrt(static_cast<double>(rank)));
  for (Eigen::Index i = 0; i < u.size(); ++i) u[i] += normal(rng);
  return u;
}

}  // namespace

double cc_chord_lower(const Vector& p, const Vector& q, const FinslerNorm& norm) { return norm(p, q - p); }

CCUpperResult cc_distance_upper(const Vector& p, const Vector& q, const Distribution& dist,
                                const FinslerNorm& norm, const CCSolverConfig& cfg) {
  cfg.validate();
  if (p.size() != dist.dimension() || q.size() != dist.dimension()) {
    throw std::invalid_argument("endpoints do not match the distribution dimension");
  }
  const ControlProblem problem(dist, norm, p, cfg.segments, cfg.substeps);

  CCUpperResult result;
  if (p == q) {
    result.path = SampledCurve(dist.dimension());
    result.path.push_back(0.0, p);
    result.path.push_back(1.0, q);
    result.restarts_run = 0;
    return result;
  }

  const Vector chord_controls = dist.frame(p).colPivHouseholderQr().solve(q - p);
  const double lower = cc_chord_lower(p, q, norm);
  const bool chord_is_lower_bound = norm.kind() == FinslerNorm::Kind::euclidean;

  bool found = false;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(r) + 1)));
    const Vector guess = initial_guess(r, chord_controls, p, q, dist.rank(), cfg.segments, rng);
    const RestartOutcome outcome = solve_from(problem, q, guess, cfg);
    result.restarts_run = r + 1;
    best_gap = std::min(best_gap, outcome.gap);
    if (outcome.gap > cfg.tolerance) continue;

    SampledCurve path = problem.path(outcome.controls, cfg.path_samples_per_segment);
    const double length = curve_length(path, norm);
    const double dense_gap = (path.back() - q).norm();
    const double value = length + kGapStretchFactor * norm(q, q - path.back());
    if (!found || value < result.value) {
      found = true;
      result.value = value;
      result.path_length = length;
      result.endpoint_gap = dense_gap;
      result.path = std::move(path);
      result.restart = r;
    }
    if (chord_is_lower_bound && result.value <= lower * (1.0 + 1e-5)) break;
  }
  if (!found) {
    throw UnreachableError("endpoint " + format_point(q) + " not reached from " + format_point(p) +
                               " within budget; best gap " + std::to_string(best_gap),
                           best_gap);
  }
  return result;
}

CCInterval cc_distance(const Vector& p, const Vector& q, const Distribution& dist, const FinslerNorm& norm,
                       const CCSolverConfig& cfg) {
  return {cc_chord_lower(p, q, norm), cc_distance_upper(p, q, dist, norm, cfg).value};
}

// ---------------------------------------------------------- MetricOracle

MetricOracle::MetricOracle(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {
  if (!evaluator_) throw std::invalid_argument("metric oracle needs an evaluator");
}

MetricOracle MetricOracle::euclidean() {
  return MetricOracle("euclidean", [](const Vector& p, const Vector& q) { return (q - p).norm(); });
}

MetricOracle MetricOracle::carnot_caratheodory(Distribution dist, FinslerNorm norm, CCSolverConfig cfg) {
  std::string name = "cc:" + dist.name();
  return MetricOracle(std::move(name), [dist = std::move(dist), norm = std::move(norm), cfg = std::move(cfg)](
                                           const Vector& p, const Vector& q) {
    return cc_distance_upper(p, q, dist, norm, cfg).value;
  });
}

MetricOracle MetricOracle::scaled(double factor, MetricOracle inner) {
  if (!(factor > 0.0)) throw std::invalid_argument("metric scale factor must be positive");
  std::string name = "scaled:" + std::to_string(factor) + ":" + inner.name();
  return MetricOracle(std::move(name), [factor, inner = std::move(inner)](const Vector& p, const Vector& q) {
    return factor * inner(p, q);
  });
}

MetricOracle parse_metric(std::string_view spec, const FinslerNorm& norm, const CCSolverConfig& cfg) {
  if (spec == "euclidean") return MetricOracle::euclidean();
  if (spec.starts_with("cc:")) {
    return MetricOracle::carnot_caratheodory(distributions::parse(spec.substr(3)), norm, cfg);
  }
  if (spec.starts_with("scaled:")) {
    const std::string_view body = spec.substr(7);
    const auto sep = body.find(':');
    if (sep == std::string_view::npos) throw std::invalid_argument("scaled metric must read scaled:<factor>:<oracle>");
    double factor = 0.0;
    const auto* end = body.data() + sep;
    auto [ptr, ec] = std::from_chars(body.data(), end, factor);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad factor in metric '" + std::string(spec) + "'");
    return MetricOracle::scaled(factor, parse_metric(body.substr(sep + 1), norm, cfg));
  }
  throw std::invalid_argument("unknown metric '" + std::string(spec) + "'");
}

// -------------------------------------------------------- compare_metrics

BiLipReport compare_metrics(const MetricOracle& d1, const MetricOracle& d2, const Domain& domain, int n_pairs,
                            double min_sep, std::uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("need at least one pair");
  const double max_sep = domain.min_width();
  if (!(min_sep > 0.0) || !(min_sep < max_sep)) {
    throw std::invalid_argument("min_sep must be positive and below the smallest box width");
  }
  const int n = domain.dimension();
  const Vector width = domain.upper() - domain.lower();

  BiLipReport report;
  report.requested_min_separation = min_sep;
  report.min_separation = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  for (int i = 0; i < n_pairs; ++i) {
    Vector direction(n);
    do {
      for (int d = 0; d < n; ++d) direction[d] = normal(rng);
    } while (direction.norm() == 0.0);
    direction.normalize();
    const double quantile = uniform(rng);
    Vector placement(n);
    for (int d = 0; d < n; ++d) placement[d] = uniform(rng);

    const double sep = min_sep * std::pow(max_sep / min_sep, quantile);
    Vector mid(n);
    for (int d = 0; d < n; ++d) {
      const double reach = 0.5 * sep * std::abs(direction[d]);
      mid[d] = domain.lower()[d] + reach + placement[d] * (width[d] - 2.0 * reach);
    }
    const Vector p = mid - 0.5 * sep * direction;
    const Vector q = mid + 0.5 * sep * direction;

    double ratio = 0.0;
    try {
      const double a = d1(p, q);
      const double b = d2(p, q);
      ratio = a / b;
    } catch (const std::exception&) {
      ratio = std::numeric_limits<double>::quiet_NaN();
    }
    if (!std::isfinite(ratio) || !(ratio > 0.0)) {
      ++report.skipped;
      continue;
    }
    report.pairs.emplace_back(p, q);
    report.ratios.push_back(ratio);
    report.l_emp = std::max({report.l_emp, ratio, 1.0 / ratio});
    report.min_separation = std::min(report.min_separation, (q - p).norm());
  }

  if (5 * report.skipped > static_cast<std::size_t>(n_pairs)) {
    throw CompareAbortedError(std::to_string(report.skipped) + " of " + std::to_string(n_pairs) +
                                  " pairs failed to evaluate",
                              std::move(report));
  }
  return report;
}

}  // namespace ccgeom
