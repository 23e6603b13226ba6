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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ccgeom/distributions.hpp"
#include "ccgeom/errors.hpp"
#include "ccgeom/fixtures.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Vector random_vector(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

TEST(Projection, HeisenbergFrozenVertical) {
  const Vector w = project_onto_distribution(vec({1, 2, 3}), vec({0, 0, 1}), distributions::heisenberg());
  EXPECT_NEAR(w(0), -0.4444444444444444, 1e-10);
  EXPECT_NEAR(w(1), 0.2222222222222222, 1e-10);
  EXPECT_NEAR(w(2), 0.5555555555555556, 1e-10);
}

TEST(Projection, HeisenbergFrozenDiagonal) {
  const Vector w = project_onto_distribution(vec({1, 2, 3}), vec({1, 1, 1}), distributions::heisenberg());
  EXPECT_NEAR(w(0), 0.3333333333333333, 1e-10);
  EXPECT_NEAR(w(1), 1.3333333333333333, 1e-10);
  EXPECT_NEAR(w(2), 0.3333333333333333, 1e-10);
}

TEST(Projection, VectorInSpanIsFixed) {
  const Distribution h = distributions::heisenberg();
  const Vector p = vec({0.3, -0.7, 2.0});
  const Vector v = h.frame(p).col(0);
  EXPECT_LT((project_onto_distribution(p, v, h) - v).norm(), 1e-14);
  const Distribution e = distributions::euclidean(3);
  EXPECT_LT((project_onto_distribution(p, vec({1, 2, 3}), e) - vec({1, 2, 3})).norm(), 1e-14);
}

TEST(Projection, PropertiesOnRandomInputs) {
  std::mt19937_64 rng(42);
  for (const Distribution& d : {distributions::heisenberg(), distributions::martinet(),
                                distributions::coordinate_plane(2, 3), distributions::euclidean(3)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Vector p = random_vector(rng, 3, 2.0);
      const Vector v = random_vector(rng, 3, 3.0);
      const Vector w = project_onto_distribution(p, v, d);
      const Matrix f = d.frame(p);
      EXPECT_LT((f.transpose() * (v - w)).norm(), 1e-12 * (1.0 + f.norm() * v.norm())) << d.name();
      EXPECT_LE(w.norm(), v.norm() * (1.0 + 1e-12)) << d.name();
      EXPECT_LT((project_onto_distribution(p, w, d) - w).norm(), 1e-12 * (1.0 + v.norm())) << d.name();
    }
  }
}

TEST(Projection, DegenerateFrameReportsPoint) {
  const Distribution bad("collapsing", 3, 2, [](const Vector& p) {
    Matrix f(3, 2);
    f << 1.0, p(0), 0.0, 0.0, 0.0, 0.0;
    return f;
  });
  try {
    project_onto_distribution(vec({2, 0, 0}), vec({1, 1, 1}), bad);
    FAIL() << "expected DegenerateFrameError";
  } catch (const DegenerateFrameError& e) {
    EXPECT_EQ(e.numerical_rank(), 1);
    EXPECT_EQ(e.expected_rank(), 2);
    EXPECT_DOUBLE_EQ(e.point()(0), 2.0);
  }
}

TEST(SubspaceDistance, BasicValues) {
  Matrix a(2, 1), b(2, 1);
  a << 1, 0;
  b << 0, 1;
  EXPECT_NEAR(subspace_distance(a, a), 0.0, 1e-15);
  EXPECT_NEAR(subspace_distance(a, b), 1.0, 1e-15);
  EXPECT_NEAR(subspace_distance(b, a), subspace_distance(a, b), 1e-15);
}

// Independent oracle: max over a fine angular grid of unit vectors u of
// |P_A u - P_B u|, with P the projector onto a line through the origin.
double angular_grid_distance(double angle_a, double angle_b) {
  const Eigen::Vector2d a(std::cos(angle_a), std::sin(angle_a));
  const Eigen::Vector2d b(std::cos(angle_b), std::sin(angle_b));
  double best = 0.0;
  for (int k = 0; k < 20000; ++k) {
    const double t = std::numbers::pi * k / 20000.0;
    const Eigen::Vector2d u(std::cos(t), std::sin(t));
    best = std::max(best, (a * a.dot(u) - b * b.dot(u)).norm());
  }
  return best;
}

TEST(SubspaceDistance, MatchesAngularGridOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = angle(rng);
    const double b = angle(rng);
    Matrix fa(2, 1), fb(2, 1);
    fa << 3.0 * std::cos(a), 3.0 * std::sin(a);
    fb << -0.5 * std::cos(b), -0.5 * std::sin(b);
    EXPECT_NEAR(subspace_distance(fa, fb), angular_grid_distance(a, b), 1e-6);
  }
}

TEST(SubspaceDistance, TriangleInequalityAndBounds) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = Matrix::Random(4, 2), b = Matrix::Random(4, 2), c = Matrix::Random(4, 2);
    const double ab = subspace_distance(a, b), bc = subspace_distance(b, c), ac = subspace_distance(a, c);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_LE(ac, ab + bc + 1e-12);
  }
}

TEST(Lipschitz, ConstantDistributionsVanish) {
  EXPECT_DOUBLE_EQ(estimate_distribution_lipschitz(distributions::euclidean(3), Domain::cube(3, 1.0, 5)), 0.0);
  EXPECT_DOUBLE_EQ(estimate_distribution_lipschitz(distributions::coordinate_plane(2, 3), Domain::cube(3, 1.0, 5)),
                   0.0);
}

TEST(Lipschitz, HeisenbergMatchesIndependentGrid) {
  EXPECT_NEAR(estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 9)),
              1.2 * 0.49613893835683387, 1e-9);
  EXPECT_NEAR(estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 17)),
              1.2 * 0.49902628924144427, 1e-9);
}

TEST(Lipschitz, HeisenbergFineGridWithinFivePercent) {
  const double c = estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 65));
  EXPECT_NEAR(c, 1.2 * 0.4999389760173477, 0.05 * 1.2 * 0.4999389760173477);
}

TEST(Lipschitz, MartinetMatchesIndependentGrid) {
  EXPECT_NEAR(estimate_distribution_lipschitz(distributions::martinet(), Domain::cube(3, 1.0, 9)),
              1.2 * 1.0785197020798836, 1e-9);
}

TEST(Lipschitz, RefinementIsStable) {
  const double c8 = estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 8));
  const double c16 = estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 16));
  EXPECT_NEAR(c16 / c8, 1.0, 0.1);
}

TEST(CurveLength, StraightPolyline) {
  SampledCurve c(2);
  c.push_back(0.0, vec({0, 0}));
  c.push_back(0.5, vec({1.5, 2}));
  c.push_back(1.0, vec({3, 4}));
  EXPECT_NEAR(curve_length(c), 5.0, 1e-15);
}

TEST(CurveLength, QuarterCircle) {
  EXPECT_NEAR(curve_length(fixtures::quarter_circle(1000)), std::numbers::pi / 2, 1e-5);
}

TEST(CurveLength, InscribedPolylinesIncreaseUnderRefinement) {
  const double l10 = curve_length(fixtures::quarter_circle(10));
  const double l100 = curve_length(fixtures::quarter_circle(100));
  const double l1000 = curve_length(fixtures::quarter_circle(1000));
  EXPECT_LE(l10, l100);
  EXPECT_LE(l100, l1000);
  EXPECT_LE(l1000, std::numbers::pi / 2);
}

TEST(CurveLength, FrameNormMeasuresHorizontalSpeedInFrameCoordinates) {
  const Distribution h = distributions::heisenberg();
  const FinslerNorm n = FinslerNorm::frame(h);
  const Vector p = vec({0.4, -0.2, 0.1});
  const Vector c = vec({0.6, -0.8});
  EXPECT_NEAR(n(p, h.frame(p) * c), 1.0, 1e-12);
}

TEST(SampledCurve, RejectsBadSamples) {
  SampledCurve c(2);
  c.push_back(0.0, vec({0, 0}));
  EXPECT_THROW(c.push_back(0.0, vec({1, 1})), MalformedCurveError);
  EXPECT_THROW(c.push_back(1.0, vec({NAN, 1})), MalformedCurveError);
  EXPECT_THROW(c.push_back(1.0, vec({1, 1, 1})), MalformedCurveError);
}

TEST(SampledCurve, InterpolatesAndRejectsOutOfRange) {
  SampledCurve c(1);
  c.push_back(0.0, vec({0}));
  c.push_back(2.0, vec({4}));
  EXPECT_DOUBLE_EQ(c.at(0.5)(0), 1.0);
  EXPECT_THROW(c.at(2.5), RangeError);
}

TEST(SampledCurve, ArclengthReparametrizationHasUnitSpeed) {
  SampledCurve c(2);
  c.push_back(0.0, vec({0, 0}));
  c.push_back(0.1, vec({3, 0}));
  c.push_back(5.0, vec({3, 4}));
  const SampledCurve r = reparametrize_by_arclength(c);
  EXPECT_NEAR(r.end_time() - r.start_time(), 7.0, 1e-12);
  EXPECT_NEAR(r.max_speed(), 1.0, 1e-12);
}

TEST(Horizontality, FrameCurvesPassAndVerticalSegmentsFail) {
  const Distribution h = distributions::heisenberg();
  const SampledCurve good = fixtures::frame_field_curve(h, vec({0.1, 0.2, 0.0}), vec({0.6, 0.8}), 1.0, 201);
  EXPECT_TRUE(horizontality_check(good, h, 1e-6).passed());
  EXPECT_TRUE(horizontality_check(fixtures::heisenberg_circle_lift(), h, 1e-5).passed());

  SampledCurve bad(3);
  bad.push_back(0.0, vec({0, 0, 0}));
  bad.push_back(1.0, vec({0, 0, 1}));
  const HorizontalityReport r = horizontality_check(bad, h, 1e-3);
  EXPECT_FALSE(r.passed());
  EXPECT_NEAR(r.max_deviation, 1.0, 1e-12);
  ASSERT_EQ(r.offending_segments.size(), 1u);
}

TEST(Horizontality, FullRankAcceptsEverything) {
  EXPECT_TRUE(horizontality_check(fixtures::quarter_circle(50), distributions::euclidean(2), 1e-12).passed());
}

TEST(Domain, ContainsAndWidth) {
  const Domain d(vec({-1, 0}), vec({1, 3}));
  EXPECT_TRUE(d.contains(vec({0, 3})));
  EXPECT_FALSE(d.contains(vec({0, 3.1})));
  EXPECT_DOUBLE_EQ(d.min_width(), 2.0);
  EXPECT_THROW(Domain(vec({1}), vec({0})), std::invalid_argument);
}

TEST(Distributions, ParseBuiltIns) {
  EXPECT_EQ(distributions::parse("heisenberg").rank(), 2);
  EXPECT_EQ(distributions::parse("martinet").dimension(), 3);
  EXPECT_EQ(distributions::parse("euclidean:4").rank(), 4);
  EXPECT_EQ(distributions::parse("plane:2-of-5").dimension(), 5);
  EXPECT_THROW(distributions::parse("engel"), std::invalid_argument);
}

}  // namespace
}  // namespace ccgeom
