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

#include "mermin/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "mermin/errors.hpp"

namespace mermin {

namespace {

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw InvalidArgument(std::string(what) + ": qubit count must be in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "], got " + std::to_string(n));
  }
}

double lr_bound_for(int n) {
  return (n % 2 == 0) ? std::ldexp(1.0, n / 2) : std::ldexp(1.0, (n - 1) / 2);
}

std::vector<Term> from_map(const std::map<std::string, Coefficient>& m) {
  std::vector<Term> terms;
  terms.reserve(m.size());
  for (const auto& [word, c] : m) terms.push_back({c, PauliString::from_string(word)});
  return terms;
}

}  // namespace

std::string coefficient_text(const Coefficient& c) {
  return c.denominator() == 1 ? std::to_string(c.numerator())
                              : std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

MerminPolynomial::MerminPolynomial(std::string name, int num_qubits, std::vector<Term> terms,
                                   double lr_bound, double qm_value)
    : name_(std::move(name)), num_qubits_(num_qubits), lr_bound_(lr_bound), qm_value_(qm_value) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.string < b.string; });
  for (auto& t : terms) {
    if (t.string.num_qubits() != num_qubits) {
      throw InvalidArgument("term " + t.string.str() + " does not act on " +
                            std::to_string(num_qubits) + " qubits");
    }
    if (!terms_.empty() && terms_.back().string == t.string) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient.numerator() == 0; });
}

MerminPolynomial mermin_direct(int n) {
  check_range(n, 3, kMaxQubits, "mermin_direct");
  std::vector<Term> terms;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    const int y = std::popcount(bits);
    if (y % 2 == 0) continue;
    std::vector<Axis> axes(n, Axis::X);
    for (int q = 0; q < n; ++q) {
      if (bits & (1u << (n - 1 - q))) axes[q] = Axis::Y;
    }
    const Coefficient sign = ((y - 1) / 2) % 2 == 0 ? 1 : -1;
    terms.push_back({sign, PauliString(std::move(axes))});
  }
  return MerminPolynomial("M" + std::to_string(n), n, std::move(terms), lr_bound_for(n),
                          std::ldexp(1.0, n - 1));
}

MerminPolynomial alsina_recursive(int n) {
  check_range(n, 1, kMaxQubits, "alsina_recursive");
  // M_k = 1/2 [ M_{k-1} (x_k + y_k) + M*_{k-1} (x_k - y_k) ],  M* = M(x <-> y)
  std::map<std::string, Coefficient> current{{"X", Coefficient(1)}};
  const Coefficient half(1, 2);
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Coefficient> next;
    for (const auto& [word, c] : current) {
      std::string swapped = word;
      for (char& ch : swapped) ch = (ch == 'X') ? 'Y' : 'X';
      next[word + 'X'] += half * c;
      next[word + 'Y'] += half * c;
      next[swapped + 'X'] += half * c;
      next[swapped + 'Y'] -= half * c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.numerator() == 0; });
    current = std::move(next);
  }

  // The bare recursion has local bound 1 and quantum maximum 2^{(n-1)/2}.
  Coefficient scale = n >= 2 ? Coefficient(std::int64_t{1} << (n - 2)) : Coefficient(1);
  if (n == 5) scale /= 2;
  for (auto& [word, c] : current) c *= scale;

  const double s = to_double(scale);
  return MerminPolynomial("M" + std::to_string(n) + "A", n, from_map(current), s,
                          s * std::pow(2.0, (n - 1) / 2.0));
}

MerminPolynomial primed(const MerminPolynomial& p) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  for (auto& t : terms) t.coefficient = -t.coefficient;
  std::string name = p.name();
  if (!name.empty() && name.back() == '\'') {
    name.pop_back();
  } else {
    name.push_back('\'');
  }
  return MerminPolynomial(std::move(name), p.num_qubits(), std::move(terms), p.lr_bound(),
                          p.qm_value());
}

std::vector<SymmetryClass> collapse(const MerminPolynomial& p) {
  std::map<int, SymmetryClass> by_y;
  for (const auto& t : p.terms()) {
    const int y = t.string.y_count();
    auto [it, inserted] = by_y.try_emplace(y, SymmetryClass{y, t.coefficient, 0});
    if (!inserted && it->second.coefficient != t.coefficient) {
      throw InvalidArgument("polynomial " + p.name() + " mixes coefficients within Y-class " +
                            std::to_string(y) + "; it is not symmetry-collapsible");
    }
    ++it->second.multiplicity;
  }
  std::vector<SymmetryClass> classes;
  classes.reserve(by_y.size());
  for (auto& [y, cls] : by_y) classes.push_back(cls);
  return classes;
}

double exact_value(const MerminPolynomial& p, const Statevector& state) {
  double total = 0.0;
  for (const auto& t : p.terms()) total += to_double(t.coefficient) * exact_expectation(state, t.string);
  return total;
}

NotAnEigenstate::NotAnEigenstate(double eigenvalue, double residual)
    : std::runtime_error("state is not an eigenvector of the polynomial (residual " +
                         std::to_string(residual) + ")"),
      eigenvalue_(eigenvalue),
      residual_(residual) {}

double eigencheck(const MerminPolynomial& p, const Statevector& state) {
  if (state.num_qubits() != p.num_qubits()) {
    throw InvalidArgument("dimension mismatch between polynomial and state");
  }
  std::vector<Amplitude> image(state.dimension(), Amplitude{0.0, 0.0});
  for (const auto& t : p.terms()) {
    const Statevector term_image = apply_pauli(state, t.string);
    const double c = to_double(t.coefficient);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] += c * term_image[i];
  }
  Amplitude overlap{0.0, 0.0};
  for (std::size_t i = 0; i < image.size(); ++i) overlap += std::conj(state[i]) * image[i];
  const double lambda = overlap.real();
  double residual2 = 0.0;
  for (std::size_t i = 0; i < image.size(); ++i) residual2 += std::norm(image[i] - lambda * state[i]);
  const double residual = std::sqrt(residual2);
  if (residual > 1e-9) throw NotAnEigenstate(lambda, residual);
  return lambda;
}

nlohmann::json coefficient_to_json(const Coefficient& c) {
  return {{"num", c.numerator()}, {"den", c.denominator()}};
}

Coefficient coefficient_from_json(const nlohmann::json& j) {
  const auto den = j.at("den").get<std::int64_t>();
  if (den == 0) throw InvalidArgument("coefficient denominator is zero");
  return Coefficient(j.at("num").get<std::int64_t>(), den);
}

nlohmann::json polynomial_to_json(const MerminPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"axes", t.string.str()}, {"coefficient", coefficient_to_json(t.coefficient)}});
  }
  return {{"name", p.name()},
          {"qubits", p.num_qubits()},
          {"lr_bound", p.lr_bound()},
          {"qm_value", p.qm_value()},
          {"terms", std::move(terms)}};
}

MerminPolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({coefficient_from_json(t.at("coefficient")),
                     PauliString::from_string(t.at("axes").get<std::string>())});
  }
  return MerminPolynomial(j.at("name").get<std::string>(), j.at("qubits").get<int>(),
                          std::move(terms), j.at("lr_bound").get<double>(),
                          j.at("qm_value").get<double>());
}

}  // namespace mermin
