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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mermin/circuit.hpp"
#include "mermin/rng.hpp"
#include "mermin/statevector.hpp"

namespace mermin {

/// Depolarizing noise after every gate plus symmetric readout flips.
struct NoiseModel {
  double single_qubit = 0.0;  // per touched qubit, after each 1-qubit gate
  double two_qubit = 0.0;     // per touched qubit, after each CNOT
  double readout = 0.0;       // per measured bit

  bool noiseless() const { return single_qubit == 0.0 && two_qubit == 0.0 && readout == 0.0; }

  /// Throws InvalidArgument unless every probability lies in [0, 1].
  void validate() const;

  /// Parses "p1,p2,readout".
  static NoiseModel parse(std::string_view text);

  /// Uniform setting p for all three channels.
  static NoiseModel uniform(double p) { return {p, p, p}; }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// Pre-simulates the noiseless prefix states of a circuit so that each shot
/// only re-simulates from its first error onward.
class TrajectorySampler {
 public:
  TrajectorySampler(const Circuit& circuit, const NoiseModel& model);

  int num_qubits() const { return circuit_.num_qubits(); }
  std::size_t dimension() const { return std::size_t{1} << circuit_.num_qubits(); }

  /// One shot: outcome index in the amplitude convention.
  ///
  /// Draw order per shot is fixed: for each gate, for each touched qubit, an
  /// error draw (and a Pauli draw on error); then the outcome draw; then one
  /// readout draw per qubit.
  std::size_t sample(Rng& rng) const;

 private:
  double error_rate(const Gate& g) const;

  Circuit circuit_;
  NoiseModel model_;
  std::vector<Statevector> prefix_;  // prefix_[k]: state after gates [0, k)
  std::vector<double> final_cdf_;
};

/// Single noisy shot of `circuit` (preparation + measurement transform).
std::size_t run_noisy_trajectory(const Circuit& circuit, const NoiseModel& model, Rng& rng);

/// Inverse-CDF draw; skips zero-probability tails so rounding in the last
/// cumulative entry can never select an impossible outcome.
std::size_t sample_index(const std::vector<double>& cdf, double u);

std::vector<double> cumulative(const std::vector<double>& probs);

}  // namespace mermin
