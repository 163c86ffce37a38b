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

#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant. Work is split into fixed chunks whose random streams are
// derived from (seed, chunk index), so both variants return bit-identical
// results for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mermin/noise.hpp"

namespace mermin::kernels {

inline constexpr std::uint64_t kShotsPerChunk = 1024;

using Histogram = std::vector<std::uint64_t>;

/// `shots` draws from the distribution with cumulative sums `cdf`.
Histogram sample_histogram_serial(const std::vector<double>& cdf, std::uint64_t shots,
                                  std::uint64_t seed);
Histogram sample_histogram_parallel(const std::vector<double>& cdf, std::uint64_t shots,
                                    std::uint64_t seed);

/// `shots` independent noisy trajectories.
Histogram trajectory_histogram_serial(const TrajectorySampler& sampler, std::uint64_t shots,
                                      std::uint64_t seed);
Histogram trajectory_histogram_parallel(const TrajectorySampler& sampler, std::uint64_t shots,
                                        std::uint64_t seed);

/// Signed sum of products of +/-1 outcomes. `y_masks[t]` selects which
/// qubits of term t read their Y outcome (same bit layout as amplitudes).
struct LhvObjective {
  int num_qubits = 0;
  std::vector<std::size_t> y_masks;
  std::vector<double> coefficients;

  /// Objective for one deterministic assignment: the low n bits are the X
  /// outcomes, the high n bits the Y outcomes, a set bit meaning -1.
  double evaluate(std::uint64_t assignment) const;
};

struct LhvOptimum {
  double value = 0.0;
  std::uint64_t assignment = 0;  // smallest maximizing assignment
};

/// Max over all 4^n assignments.
LhvOptimum lhv_max_serial(const LhvObjective& objective);
LhvOptimum lhv_max_parallel(const LhvObjective& objective);

}  // namespace mermin::kernels
