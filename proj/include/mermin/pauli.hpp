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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mermin/statevector.hpp"

namespace mermin {

enum class Axis : std::uint8_t { X, Y };

/// Tensor product of sigma_x / sigma_y factors, one per qubit.
class PauliString {
 public:
  explicit PauliString(std::vector<Axis> axes);

  /// Parses "XXY"-style words. Case-sensitive; only X and Y are accepted.
  static PauliString from_string(std::string_view word);

  /// X^{n-y_count} Y^{y_count}: the representative used for symmetry classes.
  static PauliString canonical(int num_qubits, int y_count);

  int num_qubits() const { return static_cast<int>(axes_.size()); }
  int y_count() const;
  Axis axis(int qubit) const { return axes_[qubit]; }
  std::span<const Axis> axes() const { return axes_; }

  /// Amplitude-index mask of the qubits carrying Y.
  std::size_t y_mask() const;

  std::string str() const;

  /// Swaps every X with Y.
  PauliString exchanged() const;

  /// Qubit q of the result carries axis(perm^{-1}(q)), i.e. the factor on
  /// qubit i moves to perm[i].
  PauliString permuted(std::span<const int> perm) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Axis> axes_;
};

/// p|state>. X maps |0> <-> |1>; Y maps |0> -> i|1>, |1> -> -i|0>.
Statevector apply_pauli(const Statevector& state, const PauliString& p);

/// <state|p|state> without dropping the imaginary part.
Amplitude expectation_complex(const Statevector& state, const PauliString& p);

/// <state|p|state>. Throws InvariantViolation if the imaginary part exceeds
/// 1e-12 (Pauli strings are Hermitian, so that signals a corrupted state).
double exact_expectation(const Statevector& state, const PauliString& p);

/// Throws InvalidArgument unless the permutation is a bijection on
/// {0, ..., n-1}.
void validate_permutation(std::span<const int> perm, int num_qubits);

}  // namespace mermin
