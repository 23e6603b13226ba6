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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccgeom/geometry.hpp"

namespace ccgeom {

/// Parametrized maps f_p of R^n with f_p(0) = p.
class DiffeoFamily {
 public:
  using Map = std::function<Vector(const Vector& p, const Vector& x)>;
  using JacobianFn = std::function<Matrix(const Vector& p, const Vector& x)>;

  static constexpr double kDefaultJacobianStep = 1e-5;
  static constexpr double kBasePointTolerance = 1e-9;

  DiffeoFamily(std::string name, int dimension, Map map, std::optional<JacobianFn> jacobian = std::nullopt,
               double jacobian_step = kDefaultJacobianStep);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  bool analytic_jacobian() const { return jacobian_.has_value(); }
  double jacobian_step() const { return step_; }
  DiffeoFamily with_jacobian_step(double step) const;

  Vector operator()(const Vector& p, const Vector& x) const;
  /// (df_p)_x; central differences unless an analytic Jacobian was supplied.
  Matrix jacobian(const Vector& p, const Vector& x) const;

  /// max |f_p(0) - p| over the given parameters.
  double base_point_defect(const std::vector<Vector>& parameters) const;
  /// Throws std::invalid_argument when the defect exceeds kBasePointTolerance.
  void validate_base_point(const std::vector<Vector>& parameters) const;

 private:
  std::string name_;
  int dimension_;
  Map map_;
  std::optional<JacobianFn> jacobian_;
  double step_;
};

namespace families {

/// f_p(x) = x + p
DiffeoFamily translations(int n);

/// Left translations of the Heisenberg group in exponential coordinates,
/// (x, y, z) * (x', y', z') = (x + x', y + y', z + z' + (x y' - y x') / 2).
DiffeoFamily heisenberg_left();

/// f_p(x) = x + p + |p| A x
DiffeoFamily affine(Matrix a);

/// Coordinates of f_p(x) as polynomial expressions in x1..xn and p1..pn.
DiffeoFamily polynomial(std::string name, const std::vector<std::string>& components);

/// Resolves "translations:n", "heisenberg-left" and "affine:<rows>" where
/// rows are separated by ';' and entries by ',' (e.g. "affine:0,-1,0;1,0,0;0,0,0").
DiffeoFamily parse(std::string_view spec);

}  // namespace families
}  // namespace ccgeom
