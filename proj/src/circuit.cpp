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

#include "mermin/circuit.hpp"

#include <cmath>
#include <numbers>

#include "mermin/errors.hpp"

namespace mermin {

using std::numbers::pi;

std::string to_string(SetupId id) {
  switch (id) {
    case SetupId::AL: return "al";
    case SetupId::ALModified: return "al-mod";
    case SetupId::Mermin: return "mermin";
  }
  return "?";
}

SetupId setup_from_string(const std::string& name) {
  if (name == "al") return SetupId::AL;
  if (name == "al-mod") return SetupId::ALModified;
  if (name == "mermin") return SetupId::Mermin;
  throw InvalidArgument("unknown setup '" + name + "' (expected mermin, al or al-mod)");
}

SetupConfig setup_config(int n, SetupId setup) {
  auto make = [&](double phase, MerminPolynomial poly) {
    const double lr = poly.lr_bound();
    const double qm = poly.qm_value();
    return SetupConfig{n, setup, phase, std::move(poly), lr, qm};
  };
  switch (n) {
    case 3:
      return make(pi / 2, mermin_direct(3));
    case 4:
      switch (setup) {
        case SetupId::AL: return make(-pi / 4, primed(alsina_recursive(4)));
        case SetupId::ALModified: return make(3 * pi / 4, alsina_recursive(4));
        case SetupId::Mermin: return make(pi / 2, mermin_direct(4));
      }
      break;
    case 5:
      switch (setup) {
        case SetupId::AL: return make(0.0, primed(alsina_recursive(5)));
        case SetupId::ALModified: return make(pi, alsina_recursive(5));
        case SetupId::Mermin: return make(pi / 2, mermin_direct(5));
      }
      break;
    default:
      break;
  }
  throw InvalidArgument("no setup defined for " + std::to_string(n) + " qubits (expected 3, 4 or 5)");
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("circuit qubit count out of range");
  }
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
  for (const auto& g : gates) append(g);
}

Circuit& Circuit::append(const Gate& gate) {
  validate_gate(gate, num_qubits_);
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw InvalidArgument("cannot concatenate circuits of different widths");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Statevector simulate(const Circuit& circuit, Statevector initial) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw InvalidArgument("initial state width does not match the circuit");
  }
  for (const auto& g : circuit.gates()) apply_gate_inplace(initial, g);
  return initial;
}

Statevector simulate(const Circuit& circuit) {
  return simulate(circuit, init_zero(circuit.num_qubits()));
}

Circuit ghz_circuit(int n, double phase) {
  if (n < 2 || n > kMaxQubits) {
    throw InvalidArgument("ghz_circuit: qubit count must be in [2, 8]");
  }
  Circuit c(n);
  c.append(Gate::h(0)).append(Gate::phase(0, phase));
  for (int q = 0; q + 1 < n; ++q) c.append(Gate::cnot(q, q + 1));
  return c;
}

Circuit measurement_transform(const PauliString& p) {
  Circuit c(p.num_qubits());
  for (int q = 0; q < p.num_qubits(); ++q) {
    if (p.axis(q) == Axis::Y) c.append(Gate::sdg(q));
    c.append(Gate::h(q));
  }
  return c;
}

Circuit permute_qubits(const Circuit& circuit, std::span<const int> perm) {
  validate_permutation(perm, circuit.num_qubits());
  Circuit out(circuit.num_qubits());
  for (Gate g : circuit.gates()) {
    for (int k = 0; k < g.arity(); ++k) g.targets[k] = perm[g.targets[k]];
    out.append(g);
  }
  return out;
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : circuit.gates()) {
    nlohmann::json rec{{"kind", to_string(g.kind)}};
    rec["targets"] = g.arity() == 2 ? nlohmann::json{g.targets[0], g.targets[1]}
                                    : nlohmann::json{g.targets[0]};
    if (g.kind == GateKind::Phase) rec["angle"] = g.angle;
    out.push_back(std::move(rec));
  }
  return out;
}

Circuit circuit_from_json(int num_qubits, const nlohmann::json& j) {
  Circuit c(num_qubits);
  for (const auto& rec : j) {
    Gate g;
    g.kind = gate_kind_from_string(rec.at("kind").get<std::string>());
    const auto& t = rec.at("targets");
    if (static_cast<int>(t.size()) != g.arity()) {
      throw InvalidArgument("gate record has the wrong number of targets");
    }
    g.targets[0] = t[0].get<int>();
    if (g.arity() == 2) g.targets[1] = t[1].get<int>();
    if (g.kind == GateKind::Phase) g.angle = rec.at("angle").get<double>();
    c.append(g);
  }
  return c;
}

}  // namespace mermin
