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

#include "mermin/statevector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mermin/errors.hpp"
#include "oracle.hpp"

namespace mermin {
namespace {

using std::numbers::pi;

double residual(const Statevector& a, const Statevector& b) {
  return (oracle::to_vec(a) - oracle::to_vec(b)).norm();
}

std::vector<Gate> all_gate_kinds(int n) {
  std::vector<Gate> gates;
  for (int q = 0; q < n; ++q) {
    gates.push_back(Gate::h(q));
    gates.push_back(Gate::s(q));
    gates.push_back(Gate::sdg(q));
    gates.push_back(Gate::phase(q, 0.37 * (q + 1)));
    gates.push_back(Gate::x(q));
    gates.push_back(Gate::y(q));
    gates.push_back(Gate::z(q));
    for (int t = 0; t < n; ++t) {
      if (t != q) gates.push_back(Gate::cnot(q, t));
    }
  }
  return gates;
}

TEST(StatevectorTest, InitZero) {
  const auto s = init_zero(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], Amplitude(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
  EXPECT_THROW(init_zero(0), InvalidArgument);
  EXPECT_THROW(init_zero(kMaxQubits + 1), InvalidArgument);
}

TEST(StatevectorTest, FromAmplitudesValidates) {
  EXPECT_THROW(Statevector::from_amplitudes({1.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(Statevector::from_amplitudes({1.0, 1.0}), InvalidArgument);
  EXPECT_NO_THROW(Statevector::from_amplitudes({0.6, Amplitude(0.0, 0.8)}));
}

TEST(StatevectorTest, GhzProbabilities) {
  const auto p = probabilities(ghz_state(3, pi / 2));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(p[i], (i == 0 || i == 7) ? 0.5 : 0.0, 1e-15);
  }
  const auto plus = probabilities(apply_gate(init_zero(1), Gate::h(0)));
  EXPECT_NEAR(plus[0], 0.5, 1e-15);
  EXPECT_NEAR(plus[1], 0.5, 1e-15);
}

TEST(StatevectorTest, GhzFourXBasisMatchesDenseOracle) {
  // GHZ(4, -pi/4) with H on every qubit.
  auto s = ghz_state(4, -pi / 4);
  oracle::Vec dense = oracle::to_vec(s);
  for (int q = 0; q < 4; ++q) {
    apply_gate_inplace(s, Gate::h(q));
    dense = oracle::gate(4, Gate::h(q)) * dense;
  }
  const auto p = probabilities(s);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(p[i], std::norm(dense(static_cast<Eigen::Index>(i))), 1e-12);
    const bool even = std::popcount(i) % 2 == 0;
    const double expected = (even ? 1.0 + std::cos(-pi / 4) : 1.0 - std::cos(-pi / 4)) / 16.0;
    EXPECT_NEAR(p[i], expected, 1e-12);
  }
}

TEST(GateTest, KindNamesRoundTrip) {
  for (auto k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::Phase, GateKind::X, GateKind::Y,
                 GateKind::Z, GateKind::CNOT}) {
    EXPECT_EQ(gate_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(gate_kind_from_string("T"), InvalidArgument);
}

TEST(GateTest, ValidationRejectsBadIndices) {
  auto s = init_zero(3);
  EXPECT_THROW(apply_gate_inplace(s, Gate::h(3)), InvalidArgument);
  EXPECT_THROW(apply_gate_inplace(s, Gate::h(-1)), InvalidArgument);
  EXPECT_THROW(apply_gate_inplace(s, Gate::cnot(1, 1)), InvalidArgument);
  EXPECT_THROW(apply_gate_inplace(s, Gate::cnot(0, 5)), InvalidArgument);
}

TEST(GateTest, MatchesDenseOracleForAllKinds) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_gate_kinds(n)) {
      const auto state = oracle::random_state(n, rng);
      const oracle::Vec expected = oracle::gate(n, g) * oracle::to_vec(state);
      EXPECT_LT((oracle::to_vec(apply_gate(state, g)) - expected).norm(), 1e-12)
          << to_string(g.kind) << " n=" << n;
    }
  }
}

TEST(GateTest, NormPreservedAfterEveryGate) {
  std::mt19937_64 rng(22);
  auto state = oracle::random_state(5, rng);
  const auto gates = all_gate_kinds(5);
  for (int rep = 0; rep < 400; ++rep) {
    apply_gate_inplace(state, gates[rng() % gates.size()]);
    ASSERT_NEAR(state.norm_squared(), 1.0, 1e-12);
  }
}

TEST(GateTest, AlgebraicIdentities) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int q = static_cast<int>(rng() % n);
    const auto s = oracle::random_state(n, rng);
    EXPECT_LT(residual(apply_gate(apply_gate(s, Gate::h(q)), Gate::h(q)), s), 1e-12);
    EXPECT_LT(residual(apply_gate(apply_gate(s, Gate::s(q)), Gate::sdg(q)), s), 1e-12);
    EXPECT_LT(residual(apply_gate(s, Gate::phase(q, pi / 2)), apply_gate(s, Gate::s(q))), 1e-12);
  }
}

TEST(GateTest, GlobalPhaseIsKept) {
  // Y = i X Z: same state up to global phase, different amplitudes.
  const auto one = Statevector::from_amplitudes({0.0, 1.0});
  const auto via_y = apply_gate(one, Gate::y(0));
  const auto via_x = apply_gate(one, Gate::x(0));
  EXPECT_GT(residual(via_y, via_x), 1.0);
  EXPECT_NEAR(oracle::fidelity_up_to_phase(via_y, via_x), 1.0, 1e-12);
}

}  // namespace
}  // namespace mermin
