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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "mermin/pauli.hpp"
#include "mermin/statevector.hpp"

namespace mermin {

/// Exact coefficient. The recursive construction produces halves at every
/// step; keeping them rational means equality tests never see drift.
using Coefficient = boost::rational<std::int64_t>;

inline double to_double(const Coefficient& c) {
  return boost::rational_cast<double>(c);
}

/// "3", "-1", "1/2".
std::string coefficient_text(const Coefficient& c);

struct Term {
  Coefficient coefficient;
  PauliString string;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Real linear combination of X/Y Pauli strings together with its local
/// realism bound and maximal quantum value.
///
/// Terms are kept sorted by string with duplicates merged and zero
/// coefficients dropped, so two polynomials with the same operator compare
/// equal term-for-term.
class MerminPolynomial {
 public:
  MerminPolynomial(std::string name, int num_qubits, std::vector<Term> terms, double lr_bound,
                   double qm_value);

  const std::string& name() const { return name_; }
  int num_qubits() const { return num_qubits_; }
  std::span<const Term> terms() const { return terms_; }
  double lr_bound() const { return lr_bound_; }
  double qm_value() const { return qm_value_; }

  friend bool operator==(const MerminPolynomial&, const MerminPolynomial&) = default;

 private:
  std::string name_;
  int num_qubits_;
  std::vector<Term> terms_;
  double lr_bound_;
  double qm_value_;
};

/// All strings sharing a Y-count. Valid when every member carries the same
/// coefficient, which makes the class measurable through one representative
/// on permutation-symmetric states.
struct SymmetryClass {
  int y_count = 0;
  Coefficient coefficient;
  int multiplicity = 0;

  PauliString representative(int num_qubits) const {
    return PauliString::canonical(num_qubits, y_count);
  }

  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

/// Mermin's expansion of (1/2i)[prod(sigma_x + i sigma_y) - h.c.]: every
/// odd-Y string with coefficient (-1)^{(Y-1)/2}. 3 <= n <= 8.
MerminPolynomial mermin_direct(int num_qubits);

/// Alsina-Latorre recursion from M_1 = sigma_x. Rescaled by 2^{n-2} so the
/// n = 3 result coincides with mermin_direct(3), and halved once more at
/// n = 5. 1 <= n <= 8.
MerminPolynomial alsina_recursive(int num_qubits);

/// Negated polynomial (M' = -M); bounds are unchanged.
MerminPolynomial primed(const MerminPolynomial& p);

/// One class per distinct Y-count, ascending. Throws InvalidArgument if a
/// Y-count mixes coefficients.
std::vector<SymmetryClass> collapse(const MerminPolynomial& p);

/// Sum_t c_t <state|P_t|state>.
double exact_value(const MerminPolynomial& p, const Statevector& state);

class NotAnEigenstate : public std::runtime_error {
 public:
  NotAnEigenstate(double eigenvalue, double residual);
  double eigenvalue() const { return eigenvalue_; }
  double residual() const { return residual_; }

 private:
  double eigenvalue_;
  double residual_;
};

/// Returns lambda with p|state> = lambda|state>. Throws NotAnEigenstate when
/// || p|state> - lambda|state> || > 1e-9.
double eigencheck(const MerminPolynomial& p, const Statevector& state);

/// {"num": n, "den": d}
nlohmann::json coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(const nlohmann::json& j);

/// {"name", "qubits", "lr_bound", "qm_value", "terms": [{"axes": "XXY",
/// "coefficient": {"num", "den"}}, ...]}
nlohmann::json polynomial_to_json(const MerminPolynomial& p);
MerminPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace mermin
