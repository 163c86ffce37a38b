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

#include <algorithm>
#include <bit>

#include <omp.h>

#include "mermin/rng.hpp"

namespace mermin::kernels {

namespace {

std::uint64_t chunk_count(std::uint64_t shots) {
  return (shots + kShotsPerChunk - 1) / kShotsPerChunk;
}

std::uint64_t chunk_size(std::uint64_t shots, std::uint64_t chunk) {
  return std::min(kShotsPerChunk, shots - chunk * kShotsPerChunk);
}

template <typename DrawOne>
void fill_chunk(Histogram& hist, std::uint64_t shots, std::uint64_t seed, std::uint64_t chunk,
                DrawOne&& draw) {
  Rng rng(derive_seed(seed, chunk));
  const std::uint64_t count = chunk_size(shots, chunk);
  for (std::uint64_t s = 0; s < count; ++s) ++hist[draw(rng)];
}

template <typename DrawOne>
Histogram run_serial(std::size_t dim, std::uint64_t shots, std::uint64_t seed, DrawOne&& draw) {
  Histogram hist(dim, 0);
  for (std::uint64_t c = 0; c < chunk_count(shots); ++c) fill_chunk(hist, shots, seed, c, draw);
  return hist;
}

template <typename DrawOne>
Histogram run_parallel(std::size_t dim, std::uint64_t shots, std::uint64_t seed, DrawOne&& draw) {
  const auto chunks = static_cast<std::int64_t>(chunk_count(shots));
  std::vector<Histogram> partial(chunks, Histogram(dim, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    fill_chunk(partial[c], shots, seed, static_cast<std::uint64_t>(c), draw);
  }
  Histogram hist(dim, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < dim; ++i) hist[i] += h[i];
  }
  return hist;
}

}  // namespace

Histogram sample_histogram_serial(const std::vector<double>& cdf, std::uint64_t shots,
                                  std::uint64_t seed) {
  return run_serial(cdf.size(), shots, seed,
                    [&](Rng& rng) { return sample_index(cdf, uniform01(rng)); });
}

Histogram sample_histogram_parallel(const std::vector<double>& cdf, std::uint64_t shots,
                                    std::uint64_t seed) {
  return run_parallel(cdf.size(), shots, seed,
                      [&](Rng& rng) { return sample_index(cdf, uniform01(rng)); });
}

Histogram trajectory_histogram_serial(const TrajectorySampler& sampler, std::uint64_t shots,
                                      std::uint64_t seed) {
  return run_serial(sampler.dimension(), shots, seed,
                    [&](Rng& rng) { return sampler.sample(rng); });
}

Histogram trajectory_histogram_parallel(const TrajectorySampler& sampler, std::uint64_t shots,
                                        std::uint64_t seed) {
  return run_parallel(sampler.dimension(), shots, seed,
                      [&](Rng& rng) { return sampler.sample(rng); });
}

double LhvObjective::evaluate(std::uint64_t assignment) const {
  const std::size_t low = (std::size_t{1} << num_qubits) - 1;
  const std::size_t x_bits = assignment & low;
  const std::size_t y_bits = (assignment >> num_qubits) & low;
  double total = 0.0;
  for (std::size_t t = 0; t < y_masks.size(); ++t) {
    const std::size_t negative = (x_bits & ~y_masks[t]) | (y_bits & y_masks[t]);
    total += (std::popcount(negative) & 1) ? -coefficients[t] : coefficients[t];
  }
  return total;
}

LhvOptimum lhv_max_serial(const LhvObjective& objective) {
  const std::uint64_t count = std::uint64_t{1} << (2 * objective.num_qubits);
  LhvOptimum best{objective.evaluate(0), 0};
  for (std::uint64_t a = 1; a < count; ++a) {
    const double v = objective.evaluate(a);
    if (v > best.value) best = {v, a};
  }
  return best;
}

LhvOptimum lhv_max_parallel(const LhvObjective& objective) {
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << (2 * objective.num_qubits));
  const LhvOptimum first{objective.evaluate(0), 0};
  LhvOptimum best = first;
#pragma omp parallel
  {
    LhvOptimum local = first;
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 1; a < count; ++a) {
      const double v = objective.evaluate(static_cast<std::uint64_t>(a));
      if (v > local.value) local = {v, static_cast<std::uint64_t>(a)};
    }
#pragma omp critical(lhv_max_merge)
    {
      if (local.value > best.value ||
          (local.value == best.value && local.assignment < best.assignment)) {
        best = local;
      }
    }
  }
  return best;
}

}  // namespace mermin::kernels
