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

#include "mermin/lhv.hpp"

#include <cmath>

#include "mermin/errors.hpp"

namespace mermin {

LhvAssignment LhvAssignment::decode(int n, std::uint64_t bits) {
  LhvAssignment a;
  a.qubits.resize(n);
  for (int q = 0; q < n; ++q) {
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - q);
    a.qubits[q].x = (bits & mask) ? -1 : 1;
    a.qubits[q].y = ((bits >> n) & mask) ? -1 : 1;
  }
  return a;
}

double LhvAssignment::evaluate(const MerminPolynomial& p) const {
  if (static_cast<int>(qubits.size()) != p.num_qubits()) {
    throw InvalidArgument("assignment width does not match the polynomial");
  }
  double total = 0.0;
  for (const auto& t : p.terms()) {
    int product = 1;
    for (int q = 0; q < p.num_qubits(); ++q) {
      product *= t.string.axis(q) == Axis::X ? qubits[q].x : qubits[q].y;
    }
    total += product * to_double(t.coefficient);
  }
  return total;
}

kernels::LhvObjective lhv_objective(const MerminPolynomial& p) {
  kernels::LhvObjective obj;
  obj.num_qubits = p.num_qubits();
  for (const auto& t : p.terms()) {
    obj.y_masks.push_back(t.string.y_mask());
    obj.coefficients.push_back(to_double(t.coefficient));
  }
  return obj;
}

LhvBound lr_bound_search(const MerminPolynomial& p) {
  if (p.num_qubits() > kMaxQubits) throw InvalidArgument("lr_bound_bruteforce supports n <= 8");
  const auto best = kernels::lhv_max_parallel(lhv_objective(p));
  return {best.value, LhvAssignment::decode(p.num_qubits(), best.assignment)};
}

double lr_bound_bruteforce(const MerminPolynomial& p) { return lr_bound_search(p).value; }

double lr_bound_formula(int n) {
  if (n < 2) throw InvalidArgument("lr_bound_formula needs n >= 2");
  return n % 2 == 0 ? std::ldexp(1.0, n / 2) : std::ldexp(1.0, (n - 1) / 2);
}

}  // namespace mermin
