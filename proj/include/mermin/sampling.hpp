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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mermin/polynomial.hpp"

namespace mermin {

/// Outcome histogram of N shots on n qubits. Outcomes are indexed like
/// amplitudes; the bitstring "b_0 b_1 ... b_{n-1}" lists qubit 0 first.
class ShotCounts {
 public:
  ShotCounts(int num_qubits, std::vector<std::uint64_t> counts);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t total_shots() const { return total_; }
  std::uint64_t count(std::size_t outcome) const { return counts_.at(outcome); }
  std::uint64_t count(const std::string& bitstring) const;
  std::span<const std::uint64_t> counts() const { return counts_; }

  std::string bitstring(std::size_t outcome) const;

  /// "outcome,count" header plus one line per observed outcome.
  std::string to_csv() const;
  /// {"qubits": n, "shots": N, "counts": {"000": 8192, ...}}
  nlohmann::json to_json() const;
  static ShotCounts from_json(const nlohmann::json& j);

  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;

 private:
  int num_qubits_;
  std::uint64_t total_;
  std::vector<std::uint64_t> counts_;
};

struct Estimate {
  double value = 0.0;
  double error = 0.0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// N draws from `probabilities` (size 2^n, sums to 1 within 1e-9).
/// Deterministic in `seed` and independent of the OpenMP thread count.
ShotCounts sample_shots(std::span<const double> probabilities, std::uint64_t shots,
                        std::uint64_t seed);

/// Parity expectation: value = sum_o p_o (-1)^{|o|}, error = sqrt(sum_o dp_o^2)
/// with the plug-in dp_o = sqrt(p_o (1 - p_o) / N).
Estimate expectation_from_counts(const ShotCounts& counts);

/// Polynomial value from one measured representative per class. The
/// representative is reused for all of its permutations, so each class
/// contributes coefficient * multiplicity times one estimate and its error
/// propagates with that same factor.
Estimate polynomial_estimate(std::span<const SymmetryClass> classes,
                             const std::map<int, Estimate>& term_estimates);

/// Polynomial value when every term was measured independently:
/// error = sqrt(sum_t c_t^2 dt^2).
Estimate polynomial_estimate_expanded(const MerminPolynomial& p,
                                      const std::map<std::string, Estimate>& term_estimates);

/// Sample standard deviation (divisor n - 1) of the values.
double exchange_spread(std::span<const Estimate> estimates);

/// Cuts an error to its first significant decimal (0.0221 -> 0.02,
/// 0.0898 -> 0.08, 0.0068 -> 0.006). Display only; computations keep the
/// raw error.
double display_error(double error);

/// Number of decimals shown for a display error (0.02 -> 2).
int display_decimals(double display_err);

}  // namespace mermin
