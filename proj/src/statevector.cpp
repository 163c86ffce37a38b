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

#include "mermin/statevector.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mermin/errors.hpp"

namespace mermin {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(num_qubits));
  }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidArgument("amplitude count must be a power of two >= 2");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  check_qubit_count(n);
  Statevector state(n, std::move(amplitudes));
  if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw InvalidArgument("state is not normalized");
  }
  return state;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

Statevector init_zero(int num_qubits) { return Statevector(num_qubits); }

Statevector ghz_state(int num_qubits, double phase) {
  check_qubit_count(num_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  const double r = 1.0 / std::numbers::sqrt2;
  amps.front() = r;
  amps.back() = std::polar(r, phase);
  return Statevector::from_amplitudes(std::move(amps));
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::Phase: return "PHASE";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
  static constexpr GateKind kAll[] = {GateKind::H, GateKind::S, GateKind::Sdg,
                                      GateKind::Phase, GateKind::X, GateKind::Y,
                                      GateKind::Z, GateKind::CNOT};
  for (GateKind k : kAll) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown gate kind '" + name + "'");
}

std::array<Amplitude, 4> gate_matrix(const Gate& gate) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Amplitude i{0.0, 1.0};
  switch (gate.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, i};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -i};
    case GateKind::Phase: return {1.0, 0.0, 0.0, std::polar(1.0, gate.angle)};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i, i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::CNOT: break;
  }
  throw InvalidArgument("gate_matrix: CNOT is not a single-qubit gate");
}

void validate_gate(const Gate& gate, int num_qubits) {
  for (int k = 0; k < gate.arity(); ++k) {
    const int q = gate.targets[k];
    if (q < 0 || q >= num_qubits) {
      throw InvalidArgument(to_string(gate.kind) + ": qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(num_qubits) + " qubits");
    }
  }
  if (gate.kind == GateKind::CNOT && gate.targets[0] == gate.targets[1]) {
    throw InvalidArgument("CNOT control and target must differ");
  }
}

void apply_gate_inplace(Statevector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();

  if (gate.kind == GateKind::CNOT) {
    const std::size_t cmask = state.qubit_mask(gate.targets[0]);
    const std::size_t tmask = state.qubit_mask(gate.targets[1]);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
    }
    return;
  }

  const std::size_t stride = state.qubit_mask(gate.targets[0]);
  const auto m = gate_matrix(gate);
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i + stride];
      amps[i] = m[0] * a0 + m[1] * a1;
      amps[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  apply_gate_inplace(state, gate);
  return state;
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> p(state.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state[i]);
  return p;
}

}  // namespace mermin
