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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mermin/circuit.hpp"

namespace mermin {

/// One device row of a published hardware run: class expectation values in
/// ascending Y order, then the polynomial value. 16384 shots per circuit.
struct PublishedRow {
  std::string machine;
  std::vector<double> terms;
  double result = 0.0;

  friend bool operator==(const PublishedRow&, const PublishedRow&) = default;
};

struct PublishedTable {
  int num_qubits = 0;
  SetupId setup = SetupId::Mermin;
  double term_error = 0.0;    // column error as printed
  double result_error = 0.0;  // result error as printed
  std::vector<PublishedRow> rows;

  friend bool operator==(const PublishedTable&, const PublishedTable&) = default;
};

/// Best published value for one line of the cross-study summary.
struct PublishedValue {
  double value = 0.0;
  double error = 0.0;
  friend bool operator==(const PublishedValue&, const PublishedValue&) = default;
};

struct PublishedSummary {
  std::string label;
  double lr_bound = 0.0;
  double qm_value = 0.0;
  std::optional<PublishedValue> alsina_latorre;
  std::optional<PublishedValue> garcia_martin_sierra;
  PublishedValue best;

  friend bool operator==(const PublishedSummary&, const PublishedSummary&) = default;
};

struct PublishedExchangeRow {
  std::string machine;
  std::array<double, 3> values;  // <XXY>, <XYX>, <YXX>
  double spread = 0.0;
};

/// Device table for (n, setup); n = 3 has one table shared by every setup.
const PublishedTable& published_table(int num_qubits, SetupId setup);

/// Summary line for (n, setup): the 4-qubit Mermin setup has its own line.
const PublishedSummary& published_summary(int num_qubits, SetupId setup);

std::span<const PublishedExchangeRow> published_exchange_rows();
inline constexpr double kPublishedExchangeTermError = 0.007;

}  // namespace mermin
