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

#include "mermin/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mermin/errors.hpp"

namespace mermin {

namespace {

void check_dims(const Statevector& state, const PauliString& p) {
  if (state.num_qubits() != p.num_qubits()) {
    throw InvalidArgument("dimension mismatch: state has " + std::to_string(state.num_qubits()) +
                          " qubits, Pauli string has " + std::to_string(p.num_qubits()));
  }
}

// i^k for k mod 4.
Amplitude i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliString::PauliString(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || static_cast<int>(axes_.size()) > kMaxQubits) {
    throw InvalidArgument("Pauli string length must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
}

PauliString PauliString::from_string(std::string_view word) {
  std::vector<Axis> axes;
  axes.reserve(word.size());
  for (char c : word) {
    if (c == 'X') {
      axes.push_back(Axis::X);
    } else if (c == 'Y') {
      axes.push_back(Axis::Y);
    } else {
      throw InvalidArgument("Pauli word may only contain X and Y, got '" + std::string(word) + "'");
    }
  }
  return PauliString(std::move(axes));
}

PauliString PauliString::canonical(int num_qubits, int y_count) {
  if (y_count < 0 || y_count > num_qubits) {
    throw InvalidArgument("y_count out of range");
  }
  std::vector<Axis> axes(num_qubits, Axis::X);
  std::fill(axes.end() - y_count, axes.end(), Axis::Y);
  return PauliString(std::move(axes));
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(axes_.begin(), axes_.end(), Axis::Y));
}

std::size_t PauliString::y_mask() const {
  const int n = num_qubits();
  std::size_t mask = 0;
  for (int q = 0; q < n; ++q) {
    if (axes_[q] == Axis::Y) mask |= std::size_t{1} << (n - 1 - q);
  }
  return mask;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(axes_.size());
  for (Axis a : axes_) s.push_back(a == Axis::X ? 'X' : 'Y');
  return s;
}

PauliString PauliString::exchanged() const {
  std::vector<Axis> axes(axes_);
  for (Axis& a : axes) a = (a == Axis::X) ? Axis::Y : Axis::X;
  return PauliString(std::move(axes));
}

PauliString PauliString::permuted(std::span<const int> perm) const {
  validate_permutation(perm, num_qubits());
  std::vector<Axis> axes(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) axes[perm[i]] = axes_[i];
  return PauliString(std::move(axes));
}

void validate_permutation(std::span<const int> perm, int num_qubits) {
  if (static_cast<int>(perm.size()) != num_qubits) {
    throw InvalidArgument("permutation length does not match qubit count");
  }
  std::vector<bool> seen(num_qubits, false);
  for (int v : perm) {
    if (v < 0 || v >= num_qubits || seen[v]) {
      throw InvalidArgument("permutation is not a bijection on the qubit indices");
    }
    seen[v] = true;
  }
}

// Every factor flips its qubit, so p|b> = i^Y (-1)^{|b & ymask|} |b ^ full>.
Statevector apply_pauli(const Statevector& state, const PauliString& p) {
  check_dims(state, p);
  const std::size_t full = state.dimension() - 1;
  const std::size_t ymask = p.y_mask();
  const Amplitude global = i_power(p.y_count());
  Statevector out = state;
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    const double sign = (std::popcount(b & ymask) & 1) ? -1.0 : 1.0;
    out[b ^ full] = global * sign * state[b];
  }
  return out;
}

Amplitude expectation_complex(const Statevector& state, const PauliString& p) {
  check_dims(state, p);
  const std::size_t full = state.dimension() - 1;
  const std::size_t ymask = p.y_mask();
  Amplitude acc{0.0, 0.0};
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    const double sign = (std::popcount(b & ymask) & 1) ? -1.0 : 1.0;
    acc += std::conj(state[b ^ full]) * sign * state[b];
  }
  return i_power(p.y_count()) * acc;
}

double exact_expectation(const Statevector& state, const PauliString& p) {
  const Amplitude v = expectation_complex(state, p);
  if (std::abs(v.imag()) > 1e-12) {
    throw InvariantViolation("Pauli expectation has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace mermin
