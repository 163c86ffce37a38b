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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mermin/pauli.hpp"
#include "mermin/polynomial.hpp"
#include "mermin/statevector.hpp"

namespace mermin {

/// Setup 1 (AL): Alsina-Latorre GHZ phases measured with the primed
/// polynomials. Setup 2 (ALModified): corrected phases with the A-L
/// polynomials. Setup 3 (Mermin): phase pi/2 with M_n. At n = 3 all three
/// coincide.
enum class SetupId { AL, ALModified, Mermin };

std::string to_string(SetupId id);
/// Accepts "al", "al-mod", "mermin".
SetupId setup_from_string(const std::string& name);

struct SetupConfig {
  int num_qubits;
  SetupId setup;
  double ghz_phase;
  MerminPolynomial polynomial;
  double lr_bound;
  double qm_value;
};

/// The nine (n, setup) combinations for n in {3, 4, 5}.
SetupConfig setup_config(int num_qubits, SetupId setup);

class Circuit {
 public:
  explicit Circuit(int num_qubits);
  Circuit(int num_qubits, std::vector<Gate> gates);

  int num_qubits() const { return num_qubits_; }
  std::span<const Gate> gates() const { return gates_; }

  Circuit& append(const Gate& gate);
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

Statevector simulate(const Circuit& circuit, Statevector initial);
Statevector simulate(const Circuit& circuit);

/// H and PHASE(phase) on qubit 0, then the CNOT chain 0->1, 1->2, ...
/// Produces (|0...0> + e^{i phase}|1...1>)/sqrt(2) from |0...0>.
Circuit ghz_circuit(int num_qubits, double phase);

/// Rotates each qubit so a computational-basis readout measures its factor:
/// H for X, S-dagger then H for Y.
Circuit measurement_transform(const PauliString& p);

/// Remaps every gate index q to perm[q].
Circuit permute_qubits(const Circuit& circuit, std::span<const int> perm);

/// [{"kind": "H", "targets": [0]}, {"kind": "PHASE", "targets": [0],
/// "angle": 1.57...}, ...]
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(int num_qubits, const nlohmann::json& j);

}  // namespace mermin
