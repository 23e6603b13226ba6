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

#include "ccgeom/cc_metric.hpp"
#include "ccgeom/distributions.hpp"

using namespace ccgeom;

static void BM_cc_euclidean(benchmark::State& state) {
  Vector p(2), q(2);
  p << 0.0, 0.0;
  q << 0.6, -0.8;
  CCSolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc_distance_upper(p, q, distributions::euclidean(2), FinslerNorm::euclidean(), cfg));
  }
}
BENCHMARK(BM_cc_euclidean)->Unit(benchmark::kMillisecond);

static void BM_cc_heisenberg(benchmark::State& state) {
  Vector p = Vector::Zero(3), q(3);
  q << 0.3, -0.2, 0.15;
  CCSolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc_distance_upper(p, q, distributions::heisenberg(), FinslerNorm::euclidean(), cfg));
  }
}
BENCHMARK(BM_cc_heisenberg)->Unit(benchmark::kMillisecond);

static void BM_cc_vertical(benchmark::State& state) {
  Vector p = Vector::Zero(3), q(3);
  q << 0.0, 0.0, 0.25;
  CCSolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc_distance_upper(p, q, distributions::heisenberg(), FinslerNorm::euclidean(), cfg));
  }
}
BENCHMARK(BM_cc_vertical)->Unit(benchmark::kMillisecond);
