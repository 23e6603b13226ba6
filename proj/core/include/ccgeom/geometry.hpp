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

// Chart-level primitives: domains, norms, distributions given by frames,
// sampled curves, and the measurements built on top of them.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ccgeom {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Axis-aligned box in chart coordinates, plus the per-axis sample counts
/// used when constants are estimated on a grid.
class Domain {
 public:
  Domain(Vector lower, Vector upper, std::vector<int> grid_resolution = {});

  /// [-half_width, half_width]^n with `grid` samples per axis.
  static Domain cube(int n, double half_width, int grid = 9);

  int dimension() const { return static_cast<int>(lower_.size()); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  const std::vector<int>& grid_resolution() const { return grid_; }
  Domain with_grid(std::vector<int> grid) const;

  bool contains(const Vector& p, double slack = 0.0) const;
  double min_width() const;

 private:
  Vector lower_;
  Vector upper_;
  std::vector<int> grid_;
};

class Distribution;

/// Norm on tangent vectors, possibly depending on the base point.
class FinslerNorm {
 public:
  enum class Kind { euclidean, frame, custom };
  using Evaluator = std::function<double(const Vector& point, const Vector& v)>;

  static FinslerNorm euclidean();
  static FinslerNorm custom(std::string name, Evaluator evaluator);
  /// Norm in which the frame of `dist` is orthonormal on D_p and the
  /// Euclidean normal complement is orthogonal to D_p. On horizontal vectors
  /// it is the sub-Riemannian norm |c| of the frame coordinates c.
  static FinslerNorm frame(const Distribution& dist);

  double operator()(const Vector& point, const Vector& v) const;
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  FinslerNorm(Kind kind, std::string name, Evaluator evaluator);

  Kind kind_;
  std::string name_;
  Evaluator evaluator_;
};

/// Rank-k distribution on a chart, described by a frame of column vector
/// fields. The Lipschitz constant is optional until estimated or supplied.
class Distribution {
 public:
  using FrameFn = std::function<Matrix(const Vector&)>;

  Distribution(std::string name, int dimension, int rank, FrameFn frame,
               std::optional<double> lipschitz_constant = std::nullopt);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  int rank() const { return rank_; }

  /// Raw n x k frame at p.
  Matrix frame(const Vector& p) const;
  /// Orthonormal n x k basis of span(frame(p)); throws DegenerateFrameError.
  Matrix orthonormal_frame(const Vector& p) const;

  std::optional<double> lipschitz_constant() const { return lipschitz_; }
  /// Throws std::logic_error when no constant has been set.
  double require_lipschitz_constant() const;
  Distribution with_lipschitz_constant(double c) const;

 private:
  std::string name_;
  int dimension_;
  int rank_;
  FrameFn frame_;
  std::optional<double> lipschitz_;
};

/// Relative rank tolerance used when orthonormalizing frames.
inline constexpr double kFrameRankTolerance = 1e-8;
/// Multiplier applied to grid estimates of the distribution Lipschitz constant.
inline constexpr double kLipschitzSafetyFactor = 1.2;

/// Orthonormal basis of the column span of `frame`. Columns whose pivot falls
/// below kFrameRankTolerance times the largest column norm are rank deficient.
Matrix orthonormal_basis(const Matrix& frame, const Vector& at);

/// Orthogonal projection of v onto span(frame(p)).
Vector project_onto_distribution(const Vector& p, const Vector& v, const Distribution& dist);

/// Operator norm of the difference of the orthogonal projectors onto the
/// column spans of a and b. Lies in [0, 1].
double subspace_distance(const Matrix& a, const Matrix& b);

/// Largest subspace_distance / |p - q| over axis-adjacent grid points of the
/// domain, times kLipschitzSafetyFactor.
double estimate_distribution_lipschitz(const Distribution& dist, const Domain& domain);

/// Time-stamped polyline. Times are strictly increasing.
class SampledCurve {
 public:
  SampledCurve() = default;
  explicit SampledCurve(int dimension) : dimension_(dimension) {}

  void push_back(double t, Vector x);
  /// Appends `other`, dropping its first sample when it repeats our last time.
  void append(const SampledCurve& other);

  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  int dimension() const { return dimension_; }

  double time(std::size_t i) const { return times_[i]; }
  const Vector& point(std::size_t i) const { return points_[i]; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& front() const { return points_.front(); }
  const Vector& back() const { return points_.back(); }
  double start_time() const { return times_.front(); }
  double end_time() const { return times_.back(); }
  double duration() const { return empty() ? 0.0 : end_time() - start_time(); }

  /// Piecewise-linear evaluation; throws RangeError outside [start, end].
  Vector at(double t) const;

  /// Optional vector attached to segment [i, i+1], e.g. the control that
  /// generated it.
  void set_segment_vector(std::size_t i, Vector v);
  const std::optional<Vector>& segment_vector(std::size_t i) const;

  /// sup |x_{i+1} - x_i| / (t_{i+1} - t_i), Euclidean.
  double max_speed() const;

  /// True when every sample lies in the domain (with slack).
  bool within(const Domain& domain, double slack = 0.0) const;

 private:
  int dimension_ = 0;
  std::vector<double> times_;
  std::vector<Vector> points_;
  std::vector<std::optional<Vector>> segment_vectors_;
};

/// Sum over segments of norm(midpoint, increment). Throws MalformedCurveError
/// for fewer than two samples.
double curve_length(const SampledCurve& curve, const FinslerNorm& norm = FinslerNorm::euclidean());

/// Same path, re-timed so that Euclidean speed is one. Zero-length segments
/// are dropped.
SampledCurve reparametrize_by_arclength(const SampledCurve& curve);

struct HorizontalityReport {
  double max_deviation = 0.0;
  std::vector<std::size_t> offending_segments;
  std::size_t skipped_segments = 0;

  bool passed() const { return offending_segments.empty(); }
};

/// Relative distance of each finite-difference velocity from the
/// distribution at the segment midpoint.
HorizontalityReport horizontality_check(const SampledCurve& curve, const Distribution& dist,
                                        double tol);

}  // namespace ccgeom
