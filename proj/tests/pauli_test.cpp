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

#include "mermin/pauli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mermin/errors.hpp"
#include "oracle.hpp"

namespace mermin {
namespace {

using std::numbers::pi;

PauliString random_string(int n, std::mt19937_64& rng) {
  std::vector<Axis> axes(n);
  for (auto& a : axes) a = (rng() & 1) ? Axis::Y : Axis::X;
  return PauliString(std::move(axes));
}

TEST(PauliStringTest, ParsesAndCounts) {
  const auto p = PauliString::from_string("YXYY");
  EXPECT_EQ(p.num_qubits(), 4);
  EXPECT_EQ(p.y_count(), 3);
  EXPECT_EQ(p.str(), "YXYY");
  EXPECT_EQ(p.y_mask(), 0b1011u);
  EXPECT_EQ(p.exchanged().str(), "XYXX");
  EXPECT_EQ(PauliString::canonical(5, 2).str(), "XXXYY");
}

TEST(PauliStringTest, RejectsBadWords) {
  EXPECT_THROW(PauliString::from_string("XZY"), InvalidArgument);
  EXPECT_THROW(PauliString::from_string(""), InvalidArgument);
  EXPECT_THROW(PauliString::from_string("XXXXXXXXX"), InvalidArgument);
  EXPECT_THROW(PauliString::canonical(3, 4), InvalidArgument);
}

TEST(PauliStringTest, PermutedMovesFactors) {
  const auto p = PauliString::from_string("XXY");
  const std::vector<int> swap12{0, 2, 1};
  EXPECT_EQ(p.permuted(swap12).str(), "XYX");
  const std::vector<int> cycle{1, 2, 0};
  EXPECT_EQ(p.permuted(cycle).str(), "YXX");
  const std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(p.permuted(bad), InvalidArgument);
}

TEST(ApplyPauliTest, XFlipsZero) {
  const auto out = apply_pauli(init_zero(1), PauliString::from_string("X"));
  EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1] - Amplitude(1.0, 0.0)), 0.0, 1e-15);
}

TEST(ApplyPauliTest, SingleQubitYAction) {
  const auto y = PauliString::from_string("Y");
  const auto from0 = apply_pauli(init_zero(1), y);
  EXPECT_NEAR(std::abs(from0[1] - Amplitude(0.0, 1.0)), 0.0, 1e-15);
  const auto one = Statevector::from_amplitudes({0.0, 1.0});
  const auto from1 = apply_pauli(one, y);
  EXPECT_NEAR(std::abs(from1[0] - Amplitude(0.0, -1.0)), 0.0, 1e-15);
}

TEST(ApplyPauliTest, GhzEigenstates) {
  const auto ghz = ghz_state(3, pi / 2);
  const auto yxx = apply_pauli(ghz, PauliString::from_string("YXX"));
  const auto yyy = apply_pauli(ghz, PauliString::from_string("YYY"));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(yxx[i] - ghz[i]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(yyy[i] + ghz[i]), 0.0, 1e-15);
  }
}

TEST(ApplyPauliTest, DimensionMismatchThrows) {
  EXPECT_THROW(apply_pauli(init_zero(3), PauliString::from_string("XX")), InvalidArgument);
  EXPECT_THROW(exact_expectation(init_zero(2), PauliString::from_string("XXY")), InvalidArgument);
}

TEST(ApplyPauliTest, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto state = oracle::random_state(n, rng);
      const auto p = random_string(n, rng);
      const oracle::Vec expected = oracle::pauli_word(p.str()) * oracle::to_vec(state);
      const oracle::Vec actual = oracle::to_vec(apply_pauli(state, p));
      EXPECT_LT((expected - actual).norm(), 1e-12) << p.str();
    }
  }
}

TEST(ExactExpectationTest, PublishedAndDerivedValues) {
  EXPECT_NEAR(exact_expectation(ghz_state(3, pi / 2), PauliString::from_string("YXX")), 1.0, 1e-12);

  // Frozen from the dense 16x16 and 32x32 oracles below.
  constexpr double kGhz4MinusQuarterXXXX = 0.70710678118654757;
  constexpr double kGhz5ZeroXXXYY = -1.0;
  EXPECT_NEAR(exact_expectation(ghz_state(4, -pi / 4), PauliString::from_string("XXXX")),
              kGhz4MinusQuarterXXXX, 1e-12);
  EXPECT_NEAR(exact_expectation(ghz_state(5, 0.0), PauliString::from_string("XXXYY")), kGhz5ZeroXXXYY,
              1e-12);

  const auto dense = [](int n, double phi, const std::string& word) {
    const oracle::Vec v = oracle::to_vec(ghz_state(n, phi));
    return (v.adjoint() * oracle::pauli_word(word) * v)(0, 0);
  };
  const auto d4 = dense(4, -pi / 4, "XXXX");
  EXPECT_NEAR(d4.real(), kGhz4MinusQuarterXXXX, 1e-12);
  EXPECT_NEAR(d4.imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::cos(-pi / 4 - 0 * pi / 2), kGhz4MinusQuarterXXXX, 1e-12);
  const auto d5 = dense(5, 0.0, "XXXYY");
  EXPECT_NEAR(d5.real(), kGhz5ZeroXXXYY, 1e-12);
  EXPECT_NEAR(std::cos(0.0 - 2 * pi / 2), kGhz5ZeroXXXYY, 1e-12);
}

TEST(ExactExpectationTest, HermiticityOnRandomStates) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto state = oracle::random_state(n, rng);
    const auto p = random_string(n, rng);
    const Amplitude v = expectation_complex(state, p);
    EXPECT_LT(std::abs(v.imag()), 1e-12);
    const oracle::Vec s = oracle::to_vec(state);
    EXPECT_NEAR(v.real(), (s.adjoint() * oracle::pauli_word(p.str()) * s)(0, 0).real(), 1e-12);
  }
}

TEST(ExactExpectationTest, Involution) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto state = oracle::random_state(n, rng);
    const auto p = random_string(n, rng);
    const auto twice = apply_pauli(apply_pauli(state, p), p);
    EXPECT_LT((oracle::to_vec(twice) - oracle::to_vec(state)).norm(), 1e-12);
  }
}

TEST(ExactExpectationTest, PermutationCovariance) {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto state = oracle::random_state(n, rng);
    const auto p = random_string(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double before = exact_expectation(state, p);
    const double after = exact_expectation(oracle::permute_state(state, perm), p.permuted(perm));
    EXPECT_NEAR(before, after, 1e-12);
  }
}

TEST(ExactExpectationTest, GhzClosedForm) {
  const double phases[] = {0.0, pi / 4, -pi / 4, pi / 2, -pi / 2, pi, 3 * pi / 4};
  for (int n = 1; n <= 6; ++n) {
    for (double phi : phases) {
      const auto state = ghz_state(n, phi);
      const oracle::Vec v = oracle::to_vec(state);
      for (int y = 0; y <= n; ++y) {
        const auto p = PauliString::canonical(n, y);
        const double closed = std::cos(phi - y * pi / 2);
        EXPECT_NEAR(exact_expectation(state, p), closed, 1e-10);
        if (n <= 4) {
          EXPECT_NEAR((v.adjoint() * oracle::pauli_word(p.str()) * v)(0, 0).real(), closed, 1e-10);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mermin
