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

// Published IBM Q hardware results (Vigo, Ourense, Valencia, Essex,
// IBMqx2; 16384 shots per circuit) used as comparison rows in reports.

#include "mermin/reference_data.hpp"

#include <numbers>

#include "mermin/errors.hpp"

namespace mermin {

namespace {

const std::vector<PublishedTable>& tables() {
  static const std::vector<PublishedTable> kTables = {
      {3, SetupId::Mermin, 0.007, 0.02,
       {{"Vigo", {0.835, -0.744}, 3.25},
        {"Ourense", {0.847, -0.799}, 3.34},
        {"Valencia", {0.662, -0.607}, 2.59},
        {"Essex", {0.690, -0.494}, 2.56},
        {"IBMqx2", {0.815, -0.774}, 3.22}}},
      {4, SetupId::AL, 0.007, 0.06,
       {{"Vigo", {0.583, -0.544, -0.574, 0.568, 0.596}, 9.07},
        {"Ourense", {0.608, -0.511, -0.579, 0.493, 0.549}, 8.65},
        {"Valencia", {0.489, -0.512, -0.469, 0.482, 0.434}, 7.72},
        {"Essex", {0.385, -0.261, -0.487, 0.313, 0.407}, 6.01},
        {"IBMqx2", {0.407, -0.199, -0.450, 0.216, 0.401}, 5.17}}},
      {4, SetupId::ALModified, 0.007, 0.06,
       {{"Vigo", {-0.521, 0.616, 0.527, -0.590, -0.497}, 9.00},
        {"Ourense", {-0.566, 0.489, 0.531, -0.486, -0.521}, 8.17},
        {"Valencia", {-0.480, 0.543, 0.465, -0.573, -0.410}, 8.14},
        {"Essex", {-0.522, 0.314, 0.502, -0.305, -0.438}, 6.45},
        {"IBMqx2", {-0.446, 0.224, 0.407, -0.269, -0.265}, 5.13}}},
      {4, SetupId::Mermin, 0.007, 0.04,
       {{"Vigo", {0.776, -0.759}, 6.14},
        {"Ourense", {0.743, -0.700}, 5.77},
        {"Valencia", {0.625, -0.660}, 5.14},
        {"Essex", {0.522, -0.508}, 4.12},
        {"IBMqx2", {0.525, -0.523}, 4.19}}},
      {5, SetupId::AL, 0.008, 0.08,
       {{"Vigo", {0.719, -0.589, 0.656}, 9.89},
        {"Ourense", {0.591, -0.509, 0.424}, 7.80},
        {"Valencia", {0.517, -0.420, 0.455}, 6.99},
        {"Essex", {0.506, -0.413, 0.220}, 5.74},
        {"IBMqx2", {0.570, -0.550, 0.554}, 8.84}}},
      {5, SetupId::ALModified, 0.008, 0.08,
       {{"Vigo", {-0.683, 0.611, -0.552}, 9.56},
        {"Ourense", {-0.567, 0.479, -0.435}, 7.53},
        {"Valencia", {-0.587, 0.440, -0.424}, 7.11},
        {"Essex", {-0.470, 0.366, -0.469}, 6.47},
        {"IBMqx2", {-0.611, 0.585, -0.543}, 9.18}}},
      {5, SetupId::Mermin, 0.008, 0.08,
       {{"Vigo", {0.711, -0.622, 0.554}, 10.33},
        {"Ourense", {0.511, -0.412, 0.365}, 7.04},
        {"Valencia", {0.515, -0.468, 0.412}, 7.66},
        {"Essex", {0.385, -0.344, 0.371}, 5.74},
        {"IBMqx2", {0.568, -0.563, 0.484}, 8.95}}},
  };
  return kTables;
}

const std::vector<PublishedSummary>& summaries() {
  static const std::vector<PublishedSummary> kSummaries = {
      {"3 qubits", 2.0, 4.0, PublishedValue{2.85, 0.02}, PublishedValue{2.84, 0.07}, {3.34, 0.02}},
      {"4 qubits", 4.0, 8.0 * std::numbers::sqrt2, PublishedValue{4.81, 0.06},
       PublishedValue{5.42, 0.04}, {9.07, 0.06}},
      {"4 qubits (Mermin)", 4.0, 8.0, std::nullopt, std::nullopt, {6.14, 0.04}},
      {"5 qubits", 4.0, 16.0, PublishedValue{4.05, 0.06}, PublishedValue{7.06, 0.03},
       {10.33, 0.08}},
  };
  return kSummaries;
}

const std::vector<PublishedExchangeRow>& exchange_rows() {
  static const std::vector<PublishedExchangeRow> kRows = {
      {"Vigo", {0.826, 0.801, 0.812}, 0.012},
      {"Ourense", {0.847, 0.797, 0.814}, 0.026},
      {"Valencia", {0.662, 0.595, 0.651}, 0.036},
      {"Essex", {0.690, 0.606, 0.618}, 0.045},
      {"IBMqx2", {0.815, 0.789, 0.797}, 0.013},
  };
  return kRows;
}

}  // namespace

const PublishedTable& published_table(int n, SetupId setup) {
  const SetupId key = n == 3 ? SetupId::Mermin : setup;
  for (const auto& t : tables()) {
    if (t.num_qubits == n && t.setup == key) return t;
  }
  throw InvalidArgument("no published table for " + std::to_string(n) + " qubits");
}

const PublishedSummary& published_summary(int n, SetupId setup) {
  const auto& s = summaries();
  switch (n) {
    case 3: return s[0];
    case 4: return setup == SetupId::Mermin ? s[2] : s[1];
    case 5: return s[3];
    default: break;
  }
  throw InvalidArgument("no published summary for " + std::to_string(n) + " qubits");
}

std::span<const PublishedExchangeRow> published_exchange_rows() { return exchange_rows(); }

}  // namespace mermin
