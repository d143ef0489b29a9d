// Copyright 2026 The dsclust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "dsclust/evidence.hpp"
#include "dsclust/hillclimb.hpp"
#include "dsclust/hopfield.hpp"
#include "dsclust/partition_metrics.hpp"
#include "dsclust/problems.hpp"
#include "dsclust/rng.hpp"

namespace {

using namespace dsclust;

BenchmarkProblem problem(int n) {
  return generate_full_problem(n, derive_run_seed(1, static_cast<std::uint64_t>(n)));
}

void BM_ClusterConflict(benchmark::State& state) {
  const auto p = problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_conflict(p.evidence));
  }
}
BENCHMARK(BM_ClusterConflict)->DenseRange(3, 8);

void BM_Metaconflict(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = problem(n);
  const Partition part = random_partition(p.evidence.size(), n, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metaconflict(part, p.evidence));
  }
}
BENCHMARK(BM_Metaconflict)->DenseRange(3, 7);

void BM_BuildWeights(benchmark::State& state) {
  const auto p = problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopfield::build_weights(p.evidence));
  }
}
BENCHMARK(BM_BuildWeights)->DenseRange(3, 7);

void BM_NetworkIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = problem(n);
  const auto params = hopfield::HyperParams::defaults_for(p.evidence.size());
  const auto w = hopfield::build_weights(p.evidence);
  const double eb =
      hopfield::excitation_bias(n, p.evidence.size(), params.gi, params.ri);
  const auto s = hopfield::init_state(p.evidence.size(), n, params, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopfield::update_iteration(s, w, params, eb));
  }
}
BENCHMARK(BM_NetworkIteration)->DenseRange(3, 7);

void BM_NeuralRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = problem(n);
  const auto params = hopfield::HyperParams::defaults_for(p.evidence.size());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopfield::cluster(p.evidence, n, params, ++seed));
  }
}
BENCHMARK(BM_NeuralRun)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_HillClimb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = problem(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const Partition start = random_partition(p.evidence.size(), n, ++seed);
    state.ResumeTiming();
    benchmark::DoNotOptimize(hillclimb::optimize(start, p.evidence));
  }
}
BENCHMARK(BM_HillClimb)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
  const auto p = problem(3);
  const bool symmetry = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_min(p.evidence, 3, {}, symmetry));
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
