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
#include <vector>

#include "mermin/kernels.hpp"
#include "mermin/polynomial.hpp"

namespace mermin {

/// Deterministic local hidden-variable strategy: predetermined +/-1 outcomes
/// for sigma_x and sigma_y on every qubit.
struct LhvAssignment {
  struct Outcomes {
    int x = 1;
    int y = 1;
    friend bool operator==(const Outcomes&, const Outcomes&) = default;
  };
  std::vector<Outcomes> qubits;

  /// Inverse of the 2n-bit encoding used by the enumeration kernels.
  static LhvAssignment decode(int num_qubits, std::uint64_t bits);

  /// sum_t c_t prod_i a_i^{axis(t, i)}.
  double evaluate(const MerminPolynomial& p) const;

  friend bool operator==(const LhvAssignment&, const LhvAssignment&) = default;
};

struct LhvBound {
  double value = 0.0;
  LhvAssignment maximizer;
};

kernels::LhvObjective lhv_objective(const MerminPolynomial& p);

/// Maximum of the polynomial over all 4^n deterministic assignments. Mixtures
/// cannot exceed the best vertex, so this is the local realism bound.
/// n <= 8.
LhvBound lr_bound_search(const MerminPolynomial& p);
double lr_bound_bruteforce(const MerminPolynomial& p);

/// Mermin's bound: 2^{n/2} for even n, 2^{(n-1)/2} for odd n. n >= 2.
double lr_bound_formula(int num_qubits);

/// <M_4^A> above this value rules out hybrid 2+2 local models ("genuine
/// four-particle non-locality"). Quoted constant, not derived here.
inline constexpr double kGenuineFourPartyThreshold = 8.0;

}  // namespace mermin
