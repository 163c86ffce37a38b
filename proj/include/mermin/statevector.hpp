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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mermin {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 8;

/// Dense n-qubit state. Qubit 0 is the leftmost label of |b_0 b_1 ... b_{n-1}>
/// and maps to the most significant bit of the amplitude index.
class Statevector {
 public:
  /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
  explicit Statevector(int num_qubits);

  /// Takes ownership of raw amplitudes. The size must be 2^n with
  /// 1 <= n <= kMaxQubits and the vector must have unit norm within 1e-10.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }

  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
  Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const;

  /// Bit of the amplitude index that carries `qubit`.
  std::size_t qubit_mask(int qubit) const {
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
  }

 private:
  Statevector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

Statevector init_zero(int num_qubits);

/// (|0...0> + e^{i phase}|1...1>) / sqrt(2), built directly (no circuit).
Statevector ghz_state(int num_qubits, double phase);

enum class GateKind : std::uint8_t { H, S, Sdg, Phase, X, Y, Z, CNOT };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

struct Gate {
  GateKind kind = GateKind::H;
  /// targets[0] is the acted-on qubit, or the control for CNOT;
  /// targets[1] is the CNOT target and unused otherwise.
  std::array<int, 2> targets{0, -1};
  double angle = 0.0;  // PHASE only

  int arity() const { return kind == GateKind::CNOT ? 2 : 1; }

  static Gate h(int q) { return {GateKind::H, {q, -1}, 0.0}; }
  static Gate s(int q) { return {GateKind::S, {q, -1}, 0.0}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q, -1}, 0.0}; }
  static Gate phase(int q, double theta) { return {GateKind::Phase, {q, -1}, theta}; }
  static Gate x(int q) { return {GateKind::X, {q, -1}, 0.0}; }
  static Gate y(int q) { return {GateKind::Y, {q, -1}, 0.0}; }
  static Gate z(int q) { return {GateKind::Z, {q, -1}, 0.0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// 2x2 unitary of a single-qubit gate, row-major.
std::array<Amplitude, 4> gate_matrix(const Gate& gate);

/// Throws InvalidArgument if the gate does not fit an n-qubit register.
void validate_gate(const Gate& gate, int num_qubits);

/// In-place update, one stride-ordered pass over the amplitudes.
void apply_gate_inplace(Statevector& state, const Gate& gate);

Statevector apply_gate(Statevector state, const Gate& gate);

/// Born-rule outcome distribution indexed like the amplitudes.
std::vector<double> probabilities(const Statevector& state);

}  // namespace mermin
