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

#include <gtest/gtest.h>

#include "ccgeom/distributions.hpp"
#include "ccgeom/zigzag.hpp"

namespace ccgeom {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

ZigzagSpec planar(double eps, double duration) {
  ZigzagSpec s;
  s.base = vec({0, 0});
  s.generators = {vec({1, 0}), vec({0, 1})};
  s.coefficients = {0.5, 0.5};
  s.epsilon = eps;
  s.duration = duration;
  return s;
}

ZigzagSpec heisenberg_spec(double eps) {
  ZigzagSpec s;
  s.base = vec({0, 0, 0});
  s.generators = {vec({1, 0, 0}), vec({0, 1, 0})};
  s.coefficients = {0.5, 0.5};
  s.epsilon = eps;
  s.duration = 1.0;
  return s;
}

TEST(Zigzag, EuclideanEndpointIsExactlyLinear) {
  FlowConfig flow;
  for (double eps : {0.25, 0.125, 0.05}) {
    const SampledCurve c = zigzag_curve(planar(eps, 1.0), distributions::euclidean(2), flow);
    EXPECT_NEAR(c.back()(0), 0.5, 1e-12) << eps;
    EXPECT_NEAR(c.back()(1), 0.5, 1e-12) << eps;
  }
}

TEST(Zigzag, EuclideanPermutationSymmetry) {
  FlowConfig flow;
  ZigzagSpec a = planar(0.1, 1.0);
  a.coefficients = {0.3, -0.7};
  ZigzagSpec b = a;
  std::swap(b.generators[0], b.generators[1]);
  std::swap(b.coefficients[0], b.coefficients[1]);
  const Vector ea = zigzag_curve(a, distributions::euclidean(2), flow).back();
  const Vector eb = zigzag_curve(b, distributions::euclidean(2), flow).back();
  EXPECT_LT((ea - eb).norm(), 1e-12);
}

TEST(Zigzag, SingleActiveGeneratorIsAPlainFlow) {
  FlowConfig flow;
  ZigzagSpec s = heisenberg_spec(0.2);
  s.coefficients = {1.0, 0.0};
  const Vector e1 = zigzag_curve(s, distributions::heisenberg(), flow).back();
  s.epsilon = 0.05;
  const Vector e2 = zigzag_curve(s, distributions::heisenberg(), flow).back();
  EXPECT_LT((e1 - vec({1, 0, 0})).norm(), 1e-12);
  EXPECT_LT((e1 - e2).norm(), 1e-12);
}

TEST(Zigzag, HeisenbergEndpointMatchesIndependentSimulation) {
  FlowConfig flow;
  flow.step = 1e-4;
  const Vector e = zigzag_curve(heisenberg_spec(0.05), distributions::heisenberg(), flow).back();
  EXPECT_NEAR(e(0), 0.502068638235396, 1e-9);
  EXPECT_NEAR(e(1), 0.49777430511248577, 1e-9);
  EXPECT_NEAR(e(2), 0.01168190098166003, 1e-9);
}

TEST(Zigzag, HeisenbergConvergesToTheTangentLine) {
  FlowConfig flow;
  flow.step = 1e-3;
  const ConvergenceReport r =
      tangent_convergence_check(heisenberg_spec(0.2), distributions::heisenberg(), {0.2, 0.1, 0.05, 0.025}, flow);
  ASSERT_EQ(r.deviations.size(), 4u);
  for (std::size_t i = 1; i < r.deviations.size(); ++i) EXPECT_LE(r.deviations[i], r.deviations[i - 1]);
  EXPECT_TRUE(r.passed);
}

TEST(Zigzag, EuclideanDeviationHalvesWithStep) {
  FlowConfig flow;
  const ConvergenceReport r =
      tangent_convergence_check(planar(0.2, 1.0), distributions::euclidean(2), {0.2, 0.1, 0.05}, flow);
  EXPECT_NEAR(r.deviations[1] / r.deviations[0], 0.5, 1e-6);
  EXPECT_NEAR(r.deviations[2] / r.deviations[1], 0.5, 1e-6);
  EXPECT_LE(r.deviations[0], 0.2 * 1.0 * 1.0 + 1e-12);
}

TEST(Zigzag, TargetVelocityIsTheWeightedSum) {
  ZigzagSpec s = heisenberg_spec(0.1);
  s.coefficients = {2.0, -1.0};
  EXPECT_LT((s.target_velocity() - vec({2, -1, 0})).norm(), 1e-15);
}

TEST(Zigzag, RejectsNonTangentGenerators) {
  ZigzagSpec s = heisenberg_spec(0.1);
  s.generators[1] = vec({0, 0, 1});
  EXPECT_THROW(zigzag_curve(s, distributions::heisenberg(), FlowConfig{}), std::invalid_argument);
}

TEST(Zigzag, RejectsIncreasingStepLists) {
  EXPECT_THROW(tangent_convergence_check(heisenberg_spec(0.1), distributions::heisenberg(), {0.1, 0.2}, FlowConfig{}),
               std::invalid_argument);
}

}  // namespace
}  // namespace ccgeom
