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

#include "mermin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mermin/errors.hpp"
#include "mermin/kernels.hpp"
#include "mermin/lhv.hpp"
#include "mermin/rng.hpp"

namespace mermin {

void ExperimentConfig::validate() const {
  if (num_qubits < 3 || num_qubits > 5) {
    throw InvalidArgument("experiments are defined for 3, 4 or 5 qubits");
  }
  if (shots == 0) throw InvalidArgument("shot count must be positive");
  if (!(sigma_k > 0.0)) throw InvalidArgument("sigma_k must be positive");
  noise.validate();
}

std::string to_string(Verdict v) {
  return v == Verdict::ViolatesLR ? "VIOLATES_LR" : "CONSISTENT_WITH_LR";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "VIOLATES_LR") return Verdict::ViolatesLR;
  if (s == "CONSISTENT_WITH_LR") return Verdict::ConsistentWithLR;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

std::uint64_t measurement_seed(const ExperimentConfig& cfg, std::size_t index) {
  const std::uint64_t stream = (static_cast<std::uint64_t>(cfg.setup) << 32) |
                               (static_cast<std::uint64_t>(cfg.num_qubits) << 24) |
                               (cfg.expand_permutations ? std::uint64_t{1} << 20 : 0) | index;
  return derive_seed(cfg.seed, stream);
}

ShotCounts run_circuit(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                       std::uint64_t seed) {
  if (noise.noiseless()) {
    return sample_shots(probabilities(simulate(circuit)), shots, seed);
  }
  const TrajectorySampler sampler(circuit, noise);
  return ShotCounts(circuit.num_qubits(),
                    kernels::trajectory_histogram_parallel(sampler, shots, seed));
}

namespace {

Measurement measure(const Circuit& preparation, const PauliString& string, const NoiseModel& noise,
                    std::uint64_t shots, std::uint64_t seed) {
  Circuit circuit = preparation;
  circuit.append(measurement_transform(string));
  ShotCounts counts = run_circuit(circuit, noise, shots, seed);
  const Estimate est = expectation_from_counts(counts);
  return {string, std::move(circuit), seed, std::move(counts), est};
}

double max_error(const std::vector<Measurement>& ms) {
  double m = 0.0;
  for (const auto& x : ms) m = std::max(m, x.estimate.error);
  return m;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  SetupConfig setup = setup_config(cfg.num_qubits, cfg.setup);
  const auto classes = collapse(setup.polynomial);
  const Circuit preparation = ghz_circuit(cfg.num_qubits, setup.ghz_phase);

  std::vector<PauliString> strings;
  if (cfg.expand_permutations) {
    for (const auto& t : setup.polynomial.terms()) strings.push_back(t.string);
  } else {
    for (const auto& c : classes) strings.push_back(c.representative(cfg.num_qubits));
  }

  std::vector<Measurement> measurements;
  measurements.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    measurements.push_back(
        measure(preparation, strings[i], cfg.noise, cfg.shots, measurement_seed(cfg, i)));
  }

  std::vector<ClassResult> class_results;
  Estimate result;
  if (cfg.expand_permutations) {
    std::map<std::string, Estimate> by_string;
    for (const auto& m : measurements) by_string[m.string.str()] = m.estimate;
    result = polynomial_estimate_expanded(setup.polynomial, by_string);
    for (const auto& c : classes) {
      double sum = 0.0;
      double var = 0.0;
      for (const auto& m : measurements) {
        if (m.string.y_count() != c.y_count) continue;
        sum += m.estimate.value;
        var += m.estimate.error * m.estimate.error;
      }
      const double k = c.multiplicity;
      class_results.push_back({c, c.representative(cfg.num_qubits), {sum / k, std::sqrt(var) / k}});
    }
  } else {
    std::map<int, Estimate> by_y;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      by_y[classes[i].y_count] = measurements[i].estimate;
      class_results.push_back(
          {classes[i], classes[i].representative(cfg.num_qubits), measurements[i].estimate});
    }
    result = polynomial_estimate(classes, by_y);
  }

  // Bounds are re-derived from first principles for every report.
  const double lr_check = lr_bound_bruteforce(setup.polynomial);
  if (std::abs(lr_check - setup.lr_bound) > 1e-9) {
    throw InvariantViolation("LHV search gives " + std::to_string(lr_check) + " but the stored bound is " +
                             std::to_string(setup.lr_bound));
  }
  double qm_check = 0.0;
  try {
    qm_check = eigencheck(setup.polynomial, ghz_state(cfg.num_qubits, setup.ghz_phase));
  } catch (const NotAnEigenstate& e) {
    throw InvariantViolation(std::string("setup GHZ state failed the eigenvalue check: ") + e.what());
  }
  if (std::abs(qm_check - setup.qm_value) > 1e-9) {
    throw InvariantViolation("eigenvalue " + std::to_string(qm_check) + " differs from QM value " +
                             std::to_string(setup.qm_value));
  }

  ExperimentReport r{
      .config = cfg,
      .ghz_phase = setup.ghz_phase,
      .polynomial = setup.polynomial,
      .classes = std::move(class_results),
      .measurements = std::move(measurements),
      .result = result,
      .lr_bound = setup.lr_bound,
      .qm_value = setup.qm_value,
      .verdict = result.value - cfg.sigma_k * result.error > setup.lr_bound ? Verdict::ViolatesLR
                                                                            : Verdict::ConsistentWithLR,
      .genuine_nonlocality = std::nullopt,
      .max_term_error = 0.0,
      .published = published_table(cfg.num_qubits, cfg.setup),
      .published_summary = published_summary(cfg.num_qubits, cfg.setup),
  };
  r.max_term_error = max_error(r.measurements);
  if (cfg.num_qubits == 4 && cfg.setup != SetupId::Mermin) {
    r.genuine_nonlocality = result.value > kGenuineFourPartyThreshold;
  }
  return r;
}

ExchangeTestReport run_exchange_test(int n, std::uint64_t shots, std::uint64_t seed,
                                     const NoiseModel& noise) {
  if (n < 3 || n > 5) throw InvalidArgument("exchange test supports 3 to 5 qubits");
  if (shots == 0) throw InvalidArgument("shot count must be positive");
  noise.validate();

  Circuit base = ghz_circuit(n, std::numbers::pi / 2);
  const PauliString base_string = PauliString::canonical(n, 1);
  base.append(measurement_transform(base_string));

  ExchangeTestReport r{n, shots, seed, noise, {}, 0.0, 0.0};
  for (int k = n - 1; k >= 0; --k) {
    // Swap the last qubit with qubit k: the Y factor moves to position k.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[n - 1]);
    Circuit circuit = permute_qubits(base, perm);
    const std::uint64_t s = derive_seed(seed, (std::uint64_t{0xE7} << 32) | static_cast<std::uint64_t>(k));
    ShotCounts counts = run_circuit(circuit, noise, shots, s);
    const Estimate est = expectation_from_counts(counts);
    r.measurements.push_back({base_string.permuted(perm), std::move(circuit), s, std::move(counts), est});
  }
  std::vector<Estimate> ests;
  for (const auto& m : r.measurements) ests.push_back(m.estimate);
  r.spread = exchange_spread(ests);
  r.max_term_error = max_error(r.measurements);
  return r;
}

}  // namespace mermin
