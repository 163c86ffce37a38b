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

// mermin: run Mermin-inequality experiments on the statevector simulator.
//
//   mermin run --qubits 3 --setup mermin --shots 16384 --seed 7 --format md
//   mermin exchange-test --shots 16384 --seed 7
//   mermin bounds --qubits 4 --setup al
//   mermin verify
//
// Exit codes: 0 success, 1 invalid configuration, 2 internal invariant failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <omp.h>

#include <CLI11.hpp>

#include "mermin/circuit.hpp"
#include "mermin/errors.hpp"
#include "mermin/experiment.hpp"
#include "mermin/lhv.hpp"
#include "mermin/polynomial.hpp"
#include "mermin/verify.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitInvariant = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mermin::InvalidArgument("cannot open output file '" + path + "'");
  out << text;
}

int run_bounds(int n, const std::string& setup_name) {
  using namespace mermin;
  std::optional<SetupConfig> cfg;
  if (n >= 3 && n <= 5) {
    cfg = setup_config(n, setup_from_string(setup_name));
  } else if (setup_name == "mermin") {
    auto poly = mermin_direct(n);
    const double lr = poly.lr_bound();
    const double qm = poly.qm_value();
    cfg = SetupConfig{n, SetupId::Mermin, std::numbers::pi / 2, std::move(poly), lr, qm};
  } else {
    throw InvalidArgument("setups other than mermin are defined for 3 to 5 qubits only");
  }

  const auto search = lr_bound_search(cfg->polynomial);
  const double eig = eigencheck(cfg->polynomial, ghz_state(n, cfg->ghz_phase));
  std::cout << "polynomial     " << cfg->polynomial.name() << " (" << cfg->polynomial.terms().size()
            << " terms)\n";
  for (const auto& c : collapse(cfg->polynomial)) {
    std::cout << "  Y=" << c.y_count << "  coefficient " << coefficient_text(c.coefficient) << "  x" << c.multiplicity
              << "  <" << c.representative(n).str() << ">\n";
  }
  std::cout << "GHZ phase      " << cfg->ghz_phase << "\n"
            << "LR bound       " << cfg->lr_bound << "  (brute force over " << (1ull << (2 * n))
            << " assignments: " << search.value << ")\n"
            << "QM value       " << cfg->qm_value << "  (eigenvalue on GHZ state: " << eig << ")\n";
  if (n >= 2) std::cout << "Mermin formula " << lr_bound_formula(n) << "\n";
  std::cout << "QM / LR        " << cfg->qm_value / cfg->lr_bound << "\n";

  if (search.value != cfg->lr_bound || std::abs(eig - cfg->qm_value) > 1e-9) {
    std::cerr << "bound verification failed\n";
    return kExitInvariant;
  }
  return 0;
}

int run_verify() {
  int failures = 0;
  for (const auto& r : mermin::run_invariant_suite()) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all invariants hold\n" : std::to_string(failures) + " invariant(s) failed\n");
  return failures == 0 ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mermin inequality experiments on a statevector simulator"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  mermin::ExperimentConfig cfg;
  std::string setup = "mermin";
  std::string noise;
  std::string format = "json";
  std::string out_path;

  auto* run = app.add_subcommand("run", "run one n/setup experiment and print its report");
  run->add_option("--qubits", cfg.num_qubits, "3, 4 or 5")->required();
  run->add_option("--setup", setup, "mermin, al or al-mod")->capture_default_str();
  run->add_option("--shots", cfg.shots, "shots per circuit")->capture_default_str();
  run->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  run->add_option("--noise", noise, "p1,p2,readout depolarizing/readout probabilities");
  run->add_flag("--expand-permutations", cfg.expand_permutations,
                "measure every string instead of one per symmetry class");
  run->add_option("--sigma", cfg.sigma_k, "violation requires value - sigma*error > LR")->capture_default_str();
  run->add_option("--format", format, "json, csv or md")->capture_default_str();
  run->add_option("--out", out_path, "write the report here instead of stdout");

  int exchange_qubits = 3;
  auto* exchange = app.add_subcommand("exchange-test", "qubit-exchange invariance of the one-Y terms");
  exchange->add_option("--qubits", exchange_qubits, "3 (default), 4 or 5")->capture_default_str();
  exchange->add_option("--shots", cfg.shots, "shots per circuit")->capture_default_str();
  exchange->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  exchange->add_option("--noise", noise, "p1,p2,readout");
  exchange->add_option("--format", format, "json, csv or md")->capture_default_str();
  exchange->add_option("--out", out_path, "write the report here instead of stdout");

  int bound_qubits = 3;
  auto* bounds = app.add_subcommand("bounds", "print LR/QM bounds with brute-force verification");
  bounds->add_option("--qubits", bound_qubits, "qubit count")->required();
  bounds->add_option("--setup", setup, "mermin, al or al-mod")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (!noise.empty()) cfg.noise = mermin::NoiseModel::parse(noise);
    if (*run) {
      cfg.setup = mermin::setup_from_string(setup);
      const auto fmt = mermin::format_from_string(format);
      emit(mermin::render_report(mermin::run_experiment(cfg), fmt), out_path);
      return 0;
    }
    if (*exchange) {
      const auto fmt = mermin::format_from_string(format);
      emit(mermin::render_exchange(
               mermin::run_exchange_test(exchange_qubits, cfg.shots, cfg.seed, cfg.noise), fmt),
           out_path);
      return 0;
    }
    if (*bounds) return run_bounds(bound_qubits, setup);
    if (*verify) return run_verify();
  } catch (const mermin::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
