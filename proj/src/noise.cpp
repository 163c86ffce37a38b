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

#include "mermin/noise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "mermin/errors.hpp"

namespace mermin {

void NoiseModel::validate() const {
  for (double p : {single_qubit, two_qubit, readout}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidArgument("noise probabilities must lie in [0, 1]");
    }
  }
}

NoiseModel NoiseModel::parse(std::string_view text) {
  double values[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = k < 2 ? text.find(',', pos) : text.size();
    if (comma == std::string_view::npos) {
      throw InvalidArgument("noise must be given as p1,p2,readout");
    }
    const std::string_view field = text.substr(pos, comma - pos);
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), values[k]);
    if (ec != std::errc{} || end != field.data() + field.size()) {
      throw InvalidArgument("cannot parse noise field '" + std::string(field) + "'");
    }
    pos = comma + 1;
  }
  NoiseModel m{values[0], values[1], values[2]};
  m.validate();
  return m;
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  return cdf;
}

std::size_t sample_index(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  std::size_t idx = it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
  // Roll back over trailing entries that carry no probability mass.
  while (idx > 0 && cdf[idx] == cdf[idx - 1]) --idx;
  return idx;
}

namespace {

std::vector<double> state_cdf(const Statevector& s) { return cumulative(probabilities(s)); }

void apply_random_pauli(Statevector& state, int qubit, Rng& rng) {
  static constexpr GateKind kPaulis[] = {GateKind::X, GateKind::Y, GateKind::Z};
  apply_gate_inplace(state, Gate{kPaulis[uniform_below(rng, 3)], {qubit, -1}, 0.0});
}

}  // namespace

TrajectorySampler::TrajectorySampler(const Circuit& circuit, const NoiseModel& model)
    : circuit_(circuit), model_(model) {
  model_.validate();
  prefix_.reserve(circuit.gates().size() + 1);
  prefix_.push_back(init_zero(circuit.num_qubits()));
  for (const auto& g : circuit.gates()) prefix_.push_back(apply_gate(prefix_.back(), g));
  final_cdf_ = state_cdf(prefix_.back());
}

double TrajectorySampler::error_rate(const Gate& g) const {
  return g.arity() == 2 ? model_.two_qubit : model_.single_qubit;
}

std::size_t TrajectorySampler::sample(Rng& rng) const {
  const auto gates = circuit_.gates();
  std::optional<Statevector> state;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    if (state) apply_gate_inplace(*state, g);
    const double p = error_rate(g);
    if (p == 0.0) continue;
    for (int t = 0; t < g.arity(); ++t) {
      if (uniform01(rng) < p) {
        if (!state) state = prefix_[k + 1];
        apply_random_pauli(*state, g.targets[t], rng);
      }
    }
  }

  const double u = uniform01(rng);
  std::size_t outcome = state ? sample_index(state_cdf(*state), u) : sample_index(final_cdf_, u);

  if (model_.readout > 0.0) {
    const int n = circuit_.num_qubits();
    for (int q = 0; q < n; ++q) {
      if (uniform01(rng) < model_.readout) outcome ^= std::size_t{1} << (n - 1 - q);
    }
  }
  return outcome;
}

std::size_t run_noisy_trajectory(const Circuit& circuit, const NoiseModel& model, Rng& rng) {
  return TrajectorySampler(circuit, model).sample(rng);
}

}  // namespace mermin
