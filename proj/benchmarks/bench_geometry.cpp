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

#include <benchmark/benchmark.h>

#include "ccgeom/distributions.hpp"
#include "ccgeom/fixtures.hpp"
#include "ccgeom/geometry.hpp"
#include "ccgeom/flow.hpp"
#include "ccgeom/smoothing.hpp"
#include "ccgeom/zigzag.hpp"

using namespace ccgeom;

static void BM_project(benchmark::State& state) {
  const Distribution h = distributions::heisenberg();
  Vector p(3), v(3);
  p << 0.3, -0.2, 0.1;
  v << 0.1, 0.4, 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(project_onto_distribution(p, v, h));
}
BENCHMARK(BM_project);

static void BM_lipschitz_estimate(benchmark::State& state) {
  const Distribution h = distributions::heisenberg();
  const Domain box = Domain::cube(3, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_distribution_lipschitz(h, box));
}
BENCHMARK(BM_lipschitz_estimate)->Arg(9)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_projected_flow(benchmark::State& state) {
  const Distribution h = distributions::heisenberg();
  Vector p = Vector::Zero(3), v(3);
  v << 1.0, 0.5, 0.0;
  FlowConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_projected_field(p, v, 1.0, h, cfg));
}
BENCHMARK(BM_projected_flow)->Unit(benchmark::kMillisecond);

static void BM_smooth_circle_lift(benchmark::State& state) {
  const Distribution h = distributions::heisenberg().with_lipschitz_constant(0.6);
  const SampledCurve eta = fixtures::heisenberg_circle_lift();
  SmoothingConfig cfg;
  cfg.epsilon = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smooth_horizontal_approximation(eta, h, cfg));
}
BENCHMARK(BM_smooth_circle_lift)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_zigzag(benchmark::State& state) {
  ZigzagSpec s;
  s.base = Vector::Zero(3);
  s.generators = {Vector::Unit(3, 0), Vector::Unit(3, 1)};
  s.coefficients = {0.5, 0.5};
  s.epsilon = 0.025;
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_curve(s, distributions::heisenberg(), FlowConfig{}));
}
BENCHMARK(BM_zigzag)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
