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

#include "mermin/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "mermin/circuit.hpp"
#include "mermin/experiment.hpp"
#include "mermin/lhv.hpp"
#include "mermin/polynomial.hpp"
#include "mermin/reference_data.hpp"
#include "mermin/sampling.hpp"

namespace mermin {

namespace {

constexpr SetupId kSetups[] = {SetupId::AL, SetupId::ALModified, SetupId::Mermin};

std::string setup_name(int n, SetupId s) { return std::to_string(n) + "q/" + to_string(s); }

void check(std::vector<CheckResult>& out, std::string name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    out.push_back({std::move(name), failure.empty(), std::move(failure)});
  } catch (const std::exception& e) {
    out.push_back({std::move(name), false, std::string("threw: ") + e.what()});
  }
}

// Parity expectation of the exact post-rotation distribution.
double parity_expectation(const Circuit& c) {
  const auto p = probabilities(simulate(c));
  double v = 0.0;
  for (std::size_t o = 0; o < p.size(); ++o) v += (std::popcount(o) & 1) ? -p[o] : p[o];
  return v;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> out;

  check(out, "exact QM values of all nine setups", [] {
    std::ostringstream err;
    for (int n = 3; n <= 5; ++n) {
      for (SetupId s : kSetups) {
        const auto cfg = setup_config(n, s);
        const auto state = ghz_state(n, cfg.ghz_phase);
        const double exact = exact_value(cfg.polynomial, state);
        const double eig = eigencheck(cfg.polynomial, state);
        if (std::abs(exact - cfg.qm_value) > 1e-9 || std::abs(eig - cfg.qm_value) > 1e-9) {
          err << setup_name(n, s) << ": " << exact << " / " << eig << " vs " << cfg.qm_value << "; ";
        }
      }
    }
    return err.str();
  });

  check(out, "LR bounds by exhaustive LHV search", [] {
    std::ostringstream err;
    for (int n = 3; n <= 5; ++n) {
      for (SetupId s : kSetups) {
        const auto cfg = setup_config(n, s);
        const double lr = lr_bound_bruteforce(cfg.polynomial);
        if (lr != cfg.lr_bound) err << setup_name(n, s) << ": " << lr << " vs " << cfg.lr_bound << "; ";
      }
    }
    for (int n = 3; n <= 7; ++n) {
      const double lr = lr_bound_bruteforce(mermin_direct(n));
      if (lr != lr_bound_formula(n)) err << "M" << n << ": " << lr << " vs formula " << lr_bound_formula(n) << "; ";
    }
    return err.str();
  });

  check(out, "Mermin eigenvalue 2^(n-1) on (|0..0> + i|1..1>)/sqrt2", [] {
    std::ostringstream err;
    for (int n = 3; n <= 8; ++n) {
      const double lambda = eigencheck(mermin_direct(n), ghz_state(n, std::numbers::pi / 2));
      if (std::abs(lambda - std::ldexp(1.0, n - 1)) > 1e-9) err << "n=" << n << ": " << lambda << "; ";
    }
    return err.str();
  });

  check(out, "term count and sign rule of the direct expansion", [] {
    std::ostringstream err;
    for (int n = 3; n <= 8; ++n) {
      const auto p = mermin_direct(n);
      if (p.terms().size() != (std::size_t{1} << (n - 1))) err << "n=" << n << " term count; ";
      for (const auto& t : p.terms()) {
        const int y = t.string.y_count();
        const int sign = ((y - 1) / 2) % 2 == 0 ? 1 : -1;
        if (y % 2 == 0 || t.coefficient != Coefficient(sign)) err << t.string.str() << "; ";
      }
    }
    const auto recursive = alsina_recursive(3);
    const auto direct = mermin_direct(3);
    if (!std::ranges::equal(recursive.terms(), direct.terms())) {
      err << "recursive n=3 differs from direct n=3; ";
    }
    return err.str();
  });

  check(out, "GHZ closed form cos(phi - Y pi/2)", [] {
    std::ostringstream err;
    const double pi = std::numbers::pi;
    for (int n = 2; n <= 6; ++n) {
      for (double phi : {0.0, pi / 4, -pi / 4, pi / 2, -pi / 2, pi, 3 * pi / 4}) {
        const auto state = ghz_state(n, phi);
        for (int y = 0; y <= n; ++y) {
          const double v = exact_expectation(state, PauliString::canonical(n, y));
          if (std::abs(v - std::cos(phi - y * pi / 2)) > 1e-10) err << n << "/" << phi << "/" << y << "; ";
        }
      }
    }
    return err.str();
  });

  check(out, "measurement transform parity matches exact expectation", [] {
    std::ostringstream err;
    for (int n = 3; n <= 5; ++n) {
      for (SetupId s : kSetups) {
        const auto cfg = setup_config(n, s);
        for (const auto& cls : collapse(cfg.polynomial)) {
          const auto rep = cls.representative(n);
          Circuit c = ghz_circuit(n, cfg.ghz_phase);
          c.append(measurement_transform(rep));
          const double expected = std::cos(cfg.ghz_phase - cls.y_count * std::numbers::pi / 2);
          if (std::abs(parity_expectation(c) - expected) > 1e-10) err << setup_name(n, s) << " " << rep.str() << "; ";
        }
      }
    }
    return err.str();
  });

  check(out, "noiseless shot runs violate LR within 5 sigma of QM", [] {
    std::ostringstream err;
    for (int n = 3; n <= 5; ++n) {
      for (SetupId s : kSetups) {
        ExperimentConfig cfg;
        cfg.num_qubits = n;
        cfg.setup = s;
        cfg.seed = 20260101;
        const auto r = run_experiment(cfg);
        if (std::abs(r.result.value - r.qm_value) > 5 * r.result.error || r.verdict != Verdict::ViolatesLR) {
          err << setup_name(n, s) << ": " << r.result.value << " ± " << r.result.error << "; ";
        }
      }
    }
    return err.str();
  });

  check(out, "published device rows are consistent with their polynomials", [] {
    std::ostringstream err;
    for (int n = 3; n <= 5; ++n) {
      for (SetupId s : kSetups) {
        const auto& table = published_table(n, s);
        const auto classes = collapse(setup_config(n, s).polynomial);
        for (const auto& row : table.rows) {
          std::map<int, Estimate> terms;
          for (std::size_t i = 0; i < classes.size(); ++i) {
            terms[classes[i].y_count] = {row.terms.at(i), table.term_error};
          }
          const auto est = polynomial_estimate(classes, terms);
          if (std::abs(est.value - row.result) > 0.011) err << setup_name(n, s) << " " << row.machine << "; ";
        }
      }
    }
    return err.str();
  });

  return out;
}

}  // namespace mermin
