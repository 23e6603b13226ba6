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
#include <random>

#include <gtest/gtest.h>

#include "ccgeom/distributions.hpp"
#include "ccgeom/errors.hpp"
#include "ccgeom/flow.hpp"

namespace ccgeom {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

TEST(Rk4, ExponentialDecayIsFourthOrder) {
  const VectorField f = [](const Vector& x) -> Vector { return -x; };
  const auto error = [&](int steps) {
    Vector x = vec({1.0});
    for (int i = 0; i < steps; ++i) x = rk4_step(f, x, 1.0 / steps);
    return std::abs(x(0) - std::exp(-1.0));
  };
  EXPECT_NEAR(std::log2(error(10) / error(20)), 4.0, 0.2);
}

TEST(ProjectedFlow, EuclideanIsStraight) {
  FlowConfig cfg;
  const FlowResult r = integrate_projected_field(vec({0, 0}), vec({1, 2}), 1.0, distributions::euclidean(2), cfg);
  for (std::size_t i = 0; i < r.curve.size(); ++i) {
    const double t = r.curve.time(i);
    EXPECT_NEAR(r.curve.point(i)(0), t, 1e-10);
    EXPECT_NEAR(r.curve.point(i)(1), 2 * t, 1e-10);
  }
  EXPECT_FALSE(r.exited_domain);
}

TEST(ProjectedFlow, UniformStepDividesDuration) {
  FlowConfig cfg;
  cfg.step = 0.3;
  const FlowResult r = integrate_projected_field(vec({0, 0}), vec({1, 0}), 1.0, distributions::euclidean(2), cfg, 2.0);
  ASSERT_EQ(r.curve.size(), 5u);
  EXPECT_DOUBLE_EQ(r.curve.start_time(), 2.0);
  EXPECT_DOUBLE_EQ(r.curve.end_time(), 3.0);
}

TEST(ProjectedFlow, TruncatesOnDomainExit) {
  FlowConfig cfg;
  cfg.domain = Domain::cube(2, 0.5);
  const FlowResult r = integrate_projected_field(vec({0, 0}), vec({1, 0}), 2.0, distributions::euclidean(2), cfg);
  EXPECT_TRUE(r.exited_domain);
  ASSERT_TRUE(r.exit_time.has_value());
  EXPECT_NEAR(*r.exit_time, 0.5, 2e-3);
  EXPECT_LT(r.curve.end_time(), 0.51);
}

TEST(ProjectedFlow, RankCollapseCarriesTime) {
  const Distribution d("fold", 2, 2, [](const Vector& p) {
    Matrix f(2, 2);
    f << 1.0, 1.0, 0.0, std::max(0.0, 1.0 - p(0));
    return f;
  });
  FlowConfig cfg;
  try {
    integrate_projected_field(vec({0, 0}), vec({1, 0}), 3.0, d, cfg);
    FAIL() << "expected DegenerateFrameError";
  } catch (const DegenerateFrameError& e) {
    ASSERT_TRUE(e.time().has_value());
    EXPECT_GT(*e.time(), 0.0);
    EXPECT_LT(*e.time(), 1.0 + 1e-2);
  }
}

TEST(ProjectedFlow, RejectsBadConfig) {
  FlowConfig cfg;
  cfg.step = 0.0;
  EXPECT_THROW(integrate_projected_field(vec({0, 0}), vec({1, 0}), 1.0, distributions::euclidean(2), cfg),
               std::invalid_argument);
}

TEST(Certificates, EuclideanDeviationIsZero) {
  FlowConfig cfg;
  const FlowResult r = integrate_projected_field(vec({0.3, 0}), vec({1, -1}), 1.0, distributions::euclidean(2), cfg);
  const DeviationReport d = deviation_certificate(r.curve, vec({0.3, 0}), vec({1, -1}), distributions::euclidean(2), 0.0);
  EXPECT_EQ(d.constant, 0.0);
  EXPECT_TRUE(d.passed);
}

TEST(Certificates, HeisenbergDiagonalFromOriginIsStraight) {
  const Distribution h = distributions::heisenberg().with_lipschitz_constant(0.6);
  FlowConfig cfg;
  const FlowResult r = integrate_projected_field(vec({0, 0, 0}), vec({1, 1, 0}), 0.5, h, cfg);
  const DeviationReport d = deviation_certificate(r.curve, vec({0, 0, 0}), vec({1, 1, 0}), h, 0.6);
  EXPECT_LT(d.constant, 1e-9);
  EXPECT_TRUE(d.passed);
}

class CertificateProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(CertificateProperty, SpeedAndDeviationHoldOnRandomInputs) {
  const Distribution base = distributions::parse(GetParam());
  const Domain box = Domain::cube(3, 1.0, 17);
  const double c = base.lipschitz_constant() ? *base.lipschitz_constant() : estimate_distribution_lipschitz(base, box);
  const Distribution dist = base.with_lipschitz_constant(c);
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  FlowConfig cfg;
  cfg.step = 1e-3;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector p = vec({u(rng), u(rng), u(rng)});
    const Vector v = vec({u(rng), u(rng), u(rng)});
    const FlowResult r = integrate_projected_field(p, v, 0.5, dist, cfg);
    const SpeedReport s = speed_certificate(r.curve, v);
    EXPECT_TRUE(s.passed) << GetParam() << " ratio " << s.length_ratio;
    EXPECT_LE(curve_length(r.curve), v.norm() * 0.5 * (1.0 + 1e-6));
    const DeviationReport d = deviation_certificate(r.curve, p, v, dist, c);
    EXPECT_TRUE(d.passed) << GetParam() << " constant " << d.constant << " threshold " << d.threshold;
  }
}

INSTANTIATE_TEST_SUITE_P(BuiltIns, CertificateProperty,
                         ::testing::Values("heisenberg", "martinet", "plane:2-of-3", "euclidean:3"));

}  // namespace
}  // namespace ccgeom
