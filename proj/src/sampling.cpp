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

#include "mermin/sampling.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mermin/errors.hpp"
#include "mermin/kernels.hpp"
#include "mermin/noise.hpp"

namespace mermin {

ShotCounts::ShotCounts(int num_qubits, std::vector<std::uint64_t> counts)
    : num_qubits_(num_qubits), counts_(std::move(counts)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits ||
      counts_.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("shot counts must have 2^n entries for 1 <= n <= 8");
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (total_ == 0) throw InvalidArgument("shot counts are empty");
}

std::string ShotCounts::bitstring(std::size_t outcome) const {
  std::string s(num_qubits_, '0');
  for (int q = 0; q < num_qubits_; ++q) {
    if (outcome & (std::size_t{1} << (num_qubits_ - 1 - q))) s[q] = '1';
  }
  return s;
}

std::uint64_t ShotCounts::count(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != num_qubits_) {
    throw InvalidArgument("bitstring width does not match");
  }
  std::size_t outcome = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("bitstring may only contain 0 and 1");
    outcome = (outcome << 1) | static_cast<std::size_t>(c == '1');
  }
  return counts_[outcome];
}

std::string ShotCounts::to_csv() const {
  std::ostringstream out;
  out << "outcome,count\n";
  for (std::size_t o = 0; o < counts_.size(); ++o) {
    if (counts_[o] != 0) out << bitstring(o) << ',' << counts_[o] << '\n';
  }
  return out.str();
}

nlohmann::json ShotCounts::to_json() const {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t o = 0; o < counts_.size(); ++o) {
    if (counts_[o] != 0) counts[bitstring(o)] = counts_[o];
  }
  return {{"qubits", num_qubits_}, {"shots", total_}, {"counts", std::move(counts)}};
}

ShotCounts ShotCounts::from_json(const nlohmann::json& j) {
  const int n = j.at("qubits").get<int>();
  if (n < 1 || n > kMaxQubits) throw InvalidArgument("qubit count out of range");
  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  for (const auto& [bits, c] : j.at("counts").items()) {
    if (static_cast<int>(bits.size()) != n) throw InvalidArgument("bitstring width does not match");
    counts[std::stoull(bits, nullptr, 2)] = c.get<std::uint64_t>();
  }
  ShotCounts out(n, std::move(counts));
  if (out.total_shots() != j.at("shots").get<std::uint64_t>()) {
    throw InvalidArgument("shot total does not match the counts");
  }
  return out;
}

ShotCounts sample_shots(std::span<const double> probabilities, std::uint64_t shots,
                        std::uint64_t seed) {
  const std::size_t dim = probabilities.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw InvalidArgument("distribution size must be 2^n");
  }
  if (shots == 0) throw InvalidArgument("shot count must be positive");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw InvalidArgument("distribution has a negative or NaN entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("distribution does not sum to 1");

  const auto cdf = cumulative({probabilities.begin(), probabilities.end()});
  return ShotCounts(std::countr_zero(dim), kernels::sample_histogram_parallel(cdf, shots, seed));
}

Estimate expectation_from_counts(const ShotCounts& counts) {
  const double n_shots = static_cast<double>(counts.total_shots());
  double value = 0.0;
  double var = 0.0;
  const auto c = counts.counts();
  for (std::size_t o = 0; o < c.size(); ++o) {
    if (c[o] == 0) continue;
    const double p = static_cast<double>(c[o]) / n_shots;
    value += (std::popcount(o) & 1) ? -p : p;
    var += p * (1.0 - p) / n_shots;
  }
  return {value, std::sqrt(var)};
}

Estimate polynomial_estimate(std::span<const SymmetryClass> classes,
                             const std::map<int, Estimate>& term_estimates) {
  double value = 0.0;
  double var = 0.0;
  for (const auto& cls : classes) {
    const auto it = term_estimates.find(cls.y_count);
    if (it == term_estimates.end()) {
      throw InvalidArgument("no estimate for the Y=" + std::to_string(cls.y_count) + " class");
    }
    const double weight = to_double(cls.coefficient) * cls.multiplicity;
    value += weight * it->second.value;
    var += weight * weight * it->second.error * it->second.error;
  }
  return {value, std::sqrt(var)};
}

Estimate polynomial_estimate_expanded(const MerminPolynomial& p,
                                      const std::map<std::string, Estimate>& term_estimates) {
  double value = 0.0;
  double var = 0.0;
  for (const auto& t : p.terms()) {
    const auto it = term_estimates.find(t.string.str());
    if (it == term_estimates.end()) {
      throw InvalidArgument("no estimate for term " + t.string.str());
    }
    const double c = to_double(t.coefficient);
    value += c * it->second.value;
    var += c * c * it->second.error * it->second.error;
  }
  return {value, std::sqrt(var)};
}

double exchange_spread(std::span<const Estimate> estimates) {
  if (estimates.size() < 2) throw InvalidArgument("exchange_spread needs at least two estimates");
  double mean = 0.0;
  for (const auto& e : estimates) mean += e.value;
  mean /= static_cast<double>(estimates.size());
  double ss = 0.0;
  for (const auto& e : estimates) ss += (e.value - mean) * (e.value - mean);
  return std::sqrt(ss / static_cast<double>(estimates.size() - 1));
}

int display_decimals(double display_err) {
  if (!(display_err > 0.0)) return 3;
  return std::max(0, -static_cast<int>(std::floor(std::log10(display_err))));
}

double display_error(double error) {
  if (!(error > 0.0)) return 0.0;
  const int exponent = static_cast<int>(std::floor(std::log10(error)));
  const double unit = std::pow(10.0, exponent);
  // The nudge keeps exact decimals such as 0.02 from truncating to 0.01.
  const double digit = std::floor(error / unit * (1.0 + 1e-12));
  return exponent < 0 ? digit / std::pow(10.0, -exponent) : digit * unit;
}

}  // namespace mermin
