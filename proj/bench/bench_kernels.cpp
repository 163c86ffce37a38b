// Copyright 2026 The mermin-sim Authors
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
#include <omp.h>

#include <numbers>

#include "mermin/circuit.hpp"
#include "mermin/kernels.hpp"
#include "mermin/lhv.hpp"

namespace {

using namespace mermin;

Circuit term_circuit() {
  return ghz_circuit(5, std::numbers::pi / 2).append(measurement_transform(PauliString::from_string("XXYYY")));
}

void BM_SampleSerial(benchmark::State& state) {
  const auto cdf = cumulative(probabilities(simulate(term_circuit())));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_histogram_serial(cdf, 1 << 18, 1));
}

void BM_SampleParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto cdf = cumulative(probabilities(simulate(term_circuit())));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_histogram_parallel(cdf, 1 << 18, 1));
}

void BM_TrajectorySerial(benchmark::State& state) {
  const TrajectorySampler sampler(term_circuit(), NoiseModel::uniform(0.02));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trajectory_histogram_serial(sampler, 16384, 1));
}

void BM_TrajectoryParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const TrajectorySampler sampler(term_circuit(), NoiseModel::uniform(0.02));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trajectory_histogram_parallel(sampler, 16384, 1));
}

void BM_LhvSerial(benchmark::State& state) {
  const auto obj = lhv_objective(mermin_direct(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lhv_max_serial(obj));
}

void BM_LhvParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const auto obj = lhv_objective(mermin_direct(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lhv_max_parallel(obj));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrajectorySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrajectoryParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LhvSerial)->Arg(5)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LhvParallel)->Args({7, 1})->Args({7, 4})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
