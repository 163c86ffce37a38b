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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mermin/circuit.hpp"
#include "mermin/noise.hpp"
#include "mermin/polynomial.hpp"
#include "mermin/reference_data.hpp"
#include "mermin/sampling.hpp"

namespace mermin {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultShots = 16384;

struct ExperimentConfig {
  int num_qubits = 3;
  SetupId setup = SetupId::Mermin;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = 0;
  NoiseModel noise;
  /// Measure every string of the polynomial instead of one representative
  /// per symmetry class.
  bool expand_permutations = false;
  /// Violation requires value - sigma_k * error > lr_bound.
  double sigma_k = 3.0;

  /// Throws InvalidArgument for unsupported n, zero shots, bad noise or a
  /// non-positive sigma_k.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

enum class Verdict { ViolatesLR, ConsistentWithLR };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One executed circuit: GHZ preparation followed by the basis change for
/// `string`, sampled `counts`.
struct Measurement {
  PauliString string;
  Circuit circuit;
  std::uint64_t seed = 0;
  ShotCounts counts;
  Estimate estimate;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

struct ClassResult {
  SymmetryClass symmetry;
  PauliString representative;
  /// Representative estimate, or the mean over its members in expanded mode.
  Estimate estimate;

  friend bool operator==(const ClassResult&, const ClassResult&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  double ghz_phase = 0.0;
  MerminPolynomial polynomial;
  std::vector<ClassResult> classes;
  std::vector<Measurement> measurements;
  Estimate result;
  double lr_bound = 0.0;
  double qm_value = 0.0;
  Verdict verdict = Verdict::ConsistentWithLR;
  /// Set only for the 4-qubit A-L setups: result above 8.
  std::optional<bool> genuine_nonlocality;
  double max_term_error = 0.0;
  PublishedTable published;
  PublishedSummary published_summary;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Seed of the circuit measuring class/term `index` of the given setup.
std::uint64_t measurement_seed(const ExperimentConfig& cfg, std::size_t index);

/// Samples `shots` outcomes of `circuit`, through noisy trajectories when the
/// model is not noiseless.
ShotCounts run_circuit(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                       std::uint64_t seed);

/// Runs every class circuit, assembles the polynomial estimate, and
/// re-derives both bounds (brute-force LHV search and eigenvalue check);
/// a mismatch throws InvariantViolation.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

struct ExchangeTestReport {
  int num_qubits = 3;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = 0;
  NoiseModel noise;
  /// One-Y strings with the Y on the last qubit first: XXY, XYX, YXX for n=3.
  std::vector<Measurement> measurements;
  double spread = 0.0;
  double max_term_error = 0.0;

  friend bool operator==(const ExchangeTestReport&, const ExchangeTestReport&) = default;
};

/// Measures every placement of a single sigma_y on the Mermin-phase GHZ state
/// as independent circuits obtained by relabeling qubits of the XX...Y
/// circuit. n = 3 by default; 4 and 5 are accepted.
ExchangeTestReport run_exchange_test(int num_qubits, std::uint64_t shots, std::uint64_t seed,
                                     const NoiseModel& noise);

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat format_from_string(const std::string& name);

nlohmann::json report_to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const nlohmann::json& j);
nlohmann::json exchange_to_json(const ExchangeTestReport& r);

/// JSON (full precision plus display fields), CSV (one row per symmetry
/// class plus a summary row), or a markdown device table.
std::string render_report(const ExperimentReport& r, ReportFormat format);
std::string render_exchange(const ExchangeTestReport& r, ReportFormat format);

}  // namespace mermin
