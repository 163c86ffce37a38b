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

#include "mermin/kernels.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <numbers>

#include "mermin/circuit.hpp"
#include "mermin/lhv.hpp"

namespace mermin::kernels {
namespace {

using std::numbers::pi;

class ThreadCountGuard {
 public:
  explicit ThreadCountGuard(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCountGuard() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

Circuit noisy_circuit() {
  return ghz_circuit(4, -pi / 4).append(measurement_transform(PauliString::from_string("XYYX")));
}

TEST(KernelsTest, SamplingSerialEqualsParallel) {
  const auto cdf = cumulative(probabilities(simulate(noisy_circuit())));
  for (std::uint64_t shots : {1ull, 1023ull, 1024ull, 1025ull, 16384ull, 50001ull}) {
    const auto serial = sample_histogram_serial(cdf, shots, 42);
    for (int threads : {1, 2, 4, 7}) {
      ThreadCountGuard guard(threads);
      EXPECT_EQ(sample_histogram_parallel(cdf, shots, 42), serial) << shots << " shots, " << threads;
    }
    std::uint64_t total = 0;
    for (auto c : serial) total += c;
    EXPECT_EQ(total, shots);
  }
}

TEST(KernelsTest, TrajectorySerialEqualsParallel) {
  const TrajectorySampler sampler(noisy_circuit(), NoiseModel{0.02, 0.04, 0.03});
  const auto serial = trajectory_histogram_serial(sampler, 9000, 7);
  for (int threads : {1, 3, 4}) {
    ThreadCountGuard guard(threads);
    EXPECT_EQ(trajectory_histogram_parallel(sampler, 9000, 7), serial) << threads;
  }
}

TEST(KernelsTest, SeedChangesHistogram) {
  const auto cdf = cumulative(probabilities(simulate(noisy_circuit())));
  EXPECT_NE(sample_histogram_serial(cdf, 4096, 1), sample_histogram_serial(cdf, 4096, 2));
}

TEST(KernelsTest, LhvSerialEqualsParallel) {
  for (const auto& p : {mermin_direct(3), alsina_recursive(4), primed(alsina_recursive(5)), mermin_direct(7)}) {
    const auto obj = lhv_objective(p);
    const auto serial = lhv_max_serial(obj);
    for (int threads : {1, 2, 4}) {
      ThreadCountGuard guard(threads);
      const auto parallel = lhv_max_parallel(obj);
      EXPECT_EQ(parallel.value, serial.value) << p.name();
      EXPECT_EQ(parallel.assignment, serial.assignment) << p.name();
    }
  }
}

TEST(KernelsTest, LhvReturnsSmallestMaximizer) {
  const auto obj = lhv_objective(mermin_direct(3));
  const auto best = lhv_max_serial(obj);
  for (std::uint64_t a = 0; a < best.assignment; ++a) EXPECT_LT(obj.evaluate(a), best.value);
}

}  // namespace
}  // namespace mermin::kernels
