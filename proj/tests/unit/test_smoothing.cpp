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
#include "ccgeom/fixtures.hpp"
#include "ccgeom/smoothing.hpp"

namespace ccgeom {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

double iterate(double alpha, double beta, long n) {
  double a = alpha;
  for (long k = 1; k < n; ++k) a = beta * a + alpha;
  return a;
}

TEST(Recursion, FrozenValue) { EXPECT_NEAR(recursion_bound(0.01, 1.1, 10), 0.1593742460100001, 1e-15); }

TEST(Recursion, UnitRatioIsLinear) {
  EXPECT_DOUBLE_EQ(recursion_bound(0.5, 1.0, 7), 3.5);
  EXPECT_DOUBLE_EQ(recursion_bound(0.5, 1.0, 1), 0.5);
}

TEST(Recursion, ClosedFormMatchesIteration) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> alpha(1e-6, 1.0);
  std::uniform_real_distribution<double> beta(1.0, 1.2);
  std::uniform_int_distribution<long> n(1, 400);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = alpha(rng);
    const double b = trial % 10 == 0 ? 1.0 : beta(rng);
    const long k = n(rng);
    const double expected = iterate(a, b, k);
    EXPECT_NEAR(recursion_bound(a, b, k), expected, 1e-12 * expected) << a << " " << b << " " << k;
  }
}

TEST(WindowVelocity, CircleLiftMatchesIndependentQuadrature) {
  const Vector w = window_velocity(fixtures::heisenberg_circle_lift(), 0.2, 0.1);
  EXPECT_NEAR(w(0), 0.47862689546603443, 1e-5);
  EXPECT_NEAR(w(1), -0.8761206554319253, 1e-5);
  EXPECT_NEAR(w(2), 0.03096983617872836, 1e-5);
}

TEST(WindowVelocity, RejectsWindowsOutsideTheCurve) {
  EXPECT_THROW(window_velocity(fixtures::quarter_circle(10), 1.5, 0.2), RangeError);
}

TEST(Smoothing, EuclideanSegmentIsReproduced) {
  SampledCurve eta(2);
  for (int i = 0; i <= 100; ++i) eta.push_back(i * 0.01, vec({0.6 * i * 0.01, 0.8 * i * 0.01}));
  SmoothingConfig cfg;
  cfg.epsilon = 0.1;
  const SmoothingResult r = smooth_horizontal_approximation(eta, distributions::euclidean(2), cfg);
  EXPECT_LE(r.certificate.endpoint_error, 1e-8);
  EXPECT_LE(std::abs(r.certificate.delta), 1e-8);
  EXPECT_EQ(r.certificate.predicted_error_bound, 0.0);
  for (std::size_t i = 0; i < r.sigma.size(); ++i) {
    EXPECT_LT((r.sigma.point(i) - eta.at(r.sigma.time(i))).norm(), 1e-8);
  }
}

TEST(Smoothing, RejectsNonHorizontalInput) {
  SampledCurve eta(3);
  for (int i = 0; i <= 10; ++i) eta.push_back(0.1 * i, vec({0, 0, 0.1 * i}));
  SmoothingConfig cfg;
  cfg.epsilon = 0.1;
  const Distribution h = distributions::heisenberg().with_lipschitz_constant(0.6);
  try {
    smooth_horizontal_approximation(eta, h, cfg);
    FAIL() << "expected NotHorizontalError";
  } catch (const NotHorizontalError& e) {
    EXPECT_EQ(e.report().offending_segments.size(), 10u);
  }
}

TEST(Smoothing, NeedsALipschitzConstant) {
  SmoothingConfig cfg;
  cfg.epsilon = 0.1;
  EXPECT_THROW(smooth_horizontal_approximation(fixtures::heisenberg_circle_lift(), distributions::heisenberg(), cfg),
               std::logic_error);
}

TEST(Smoothing, DomainExitAbortsWithPartialResult) {
  SmoothingConfig cfg;
  cfg.epsilon = 0.1;
  cfg.flow.domain = Domain::cube(3, 0.45);
  const Distribution h = distributions::heisenberg().with_lipschitz_constant(0.6);
  SampledCurve eta(3);
  for (int i = 0; i <= 100; ++i) eta.push_back(0.01 * i, vec({0.01 * i, 0, 0}));
  try {
    smooth_horizontal_approximation(eta, h, cfg);
    FAIL() << "expected SmoothingAbortedError";
  } catch (const SmoothingAbortedError& e) {
    EXPECT_EQ(e.partial().pieces.size(), 5u);
  }
}

class CircleLift : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const double c = estimate_distribution_lipschitz(distributions::heisenberg(), Domain::cube(3, 1.0, 33));
    dist_ = new Distribution(distributions::heisenberg().with_lipschitz_constant(c));
    eta_ = new SampledCurve(fixtures::heisenberg_circle_lift());
    for (double eps : {0.08, 0.04, 0.02, 0.01}) {
      SmoothingConfig cfg;
      cfg.epsilon = eps;
      results_.push_back(smooth_horizontal_approximation(*eta_, *dist_, cfg));
    }
  }
  static void TearDownTestSuite() {
    delete dist_;
    delete eta_;
    results_.clear();
  }
  static Distribution* dist_;
  static SampledCurve* eta_;
  static std::vector<SmoothingResult> results_;
};

Distribution* CircleLift::dist_ = nullptr;
SampledCurve* CircleLift::eta_ = nullptr;
std::vector<SmoothingResult> CircleLift::results_;

TEST_F(CircleLift, EndpointErrorDecreasesWithStep) {
  for (std::size_t i = 1; i < results_.size(); ++i) {
    const double ratio = results_[i].certificate.endpoint_error / results_[i - 1].certificate.endpoint_error;
    EXPECT_LE(ratio, 0.7) << "step " << results_[i].certificate.epsilon;
  }
  EXPECT_LE(results_.back().certificate.endpoint_error, 0.5 * results_.front().certificate.endpoint_error);
}

TEST_F(CircleLift, ErrorWithinTwiceThePredictedBound) {
  for (const SmoothingResult& r : results_) {
    EXPECT_LE(r.certificate.endpoint_error, 2.0 * r.certificate.predicted_error_bound) << r.certificate.epsilon;
  }
}

TEST_F(CircleLift, LengthInflationSmall) {
  EXPECT_LE(std::abs(results_.back().certificate.delta), 0.05);
  EXPECT_LE(results_.back().certificate.delta, 0.05);
}

TEST_F(CircleLift, OutputIsHorizontalAndSpeedCapped) {
  for (const SmoothingResult& r : results_) {
    EXPECT_TRUE(horizontality_check(r.sigma, *dist_, 1e-5).passed());
    EXPECT_LE(r.sigma.max_speed(), r.certificate.speed_cap * (1.0 + 1e-6));
    EXPECT_LE(r.certificate.speed_cap, 1.0 + 1e-9);
  }
}

TEST_F(CircleLift, SelectedVectorsAreHorizontal) {
  const SmoothingResult& r = results_.back();
  for (const SmoothingPiece& piece : r.pieces) {
    EXPECT_LT((project_onto_distribution(piece.start, piece.velocity, *dist_) - piece.velocity).norm(), 1e-12);
  }
  EXPECT_EQ(r.pieces.size(), r.certificate.windows);
}

TEST_F(CircleLift, PiecesTileTheTimeInterval) {
  const SmoothingResult& r = results_.front();
  double t = r.pieces.front().start_time;
  for (const SmoothingPiece& piece : r.pieces) {
    EXPECT_NEAR(piece.start_time, t, 1e-12);
    t += piece.duration;
  }
  EXPECT_NEAR(t, r.sigma.end_time(), 1e-9);
}

}  // namespace
}  // namespace ccgeom
