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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mermin/errors.hpp"
#include "mermin/lhv.hpp"
#include "mermin/verify.hpp"

namespace mermin {
namespace {

const SetupId kSetups[] = {SetupId::AL, SetupId::ALModified, SetupId::Mermin};

ExperimentConfig config(int n, SetupId setup, std::uint64_t seed = 0) {
  ExperimentConfig cfg;
  cfg.num_qubits = n;
  cfg.setup = setup;
  cfg.seed = seed;
  return cfg;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(ExperimentConfigTest, Validation) {
  EXPECT_NO_THROW(config(4, SetupId::AL).validate());
  EXPECT_THROW(config(2, SetupId::Mermin).validate(), InvalidArgument);
  EXPECT_THROW(config(6, SetupId::Mermin).validate(), InvalidArgument);
  auto cfg = config(3, SetupId::Mermin);
  cfg.shots = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = config(3, SetupId::Mermin);
  cfg.sigma_k = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = config(3, SetupId::Mermin);
  cfg.noise.readout = 2.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
}

TEST(ExperimentTest, NoiselessNineSetupsViolate) {
  for (int n = 3; n <= 5; ++n) {
    for (auto id : kSetups) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto r = run_experiment(config(n, id, seed));
        ASSERT_EQ(r.verdict, Verdict::ViolatesLR) << n << " " << to_string(id) << " seed " << seed;
        ASSERT_LE(std::abs(r.result.value - r.qm_value), 5 * r.result.error + 1e-12);
      }
    }
  }
}

TEST(ExperimentTest, BoundsRecomputedAtReportTime) {
  for (int n = 3; n <= 5; ++n) {
    for (auto id : kSetups) {
      const auto r = run_experiment(config(n, id));
      EXPECT_NEAR(r.lr_bound, lr_bound_bruteforce(r.polynomial), 1e-9);
      EXPECT_NEAR(r.qm_value, eigencheck(r.polynomial, ghz_state(n, r.ghz_phase)), 1e-9);
      EXPECT_EQ(r.classes.size(), collapse(r.polynomial).size());
      EXPECT_EQ(r.measurements.size(), r.classes.size());
      double max_err = 0.0;
      for (const auto& c : r.classes) max_err = std::max(max_err, c.estimate.error);
      EXPECT_DOUBLE_EQ(r.max_term_error, max_err);
    }
  }
}

TEST(ExperimentTest, GenuineNonlocalityFlag) {
  EXPECT_EQ(run_experiment(config(4, SetupId::AL)).genuine_nonlocality, std::optional<bool>(true));
  EXPECT_EQ(run_experiment(config(4, SetupId::ALModified)).genuine_nonlocality, std::optional<bool>(true));
  EXPECT_FALSE(run_experiment(config(4, SetupId::Mermin)).genuine_nonlocality.has_value());
  EXPECT_FALSE(run_experiment(config(3, SetupId::AL)).genuine_nonlocality.has_value());
  EXPECT_FALSE(run_experiment(config(5, SetupId::AL)).genuine_nonlocality.has_value());

  auto noisy = config(4, SetupId::AL, 3);
  noisy.noise = NoiseModel::uniform(0.02);
  const auto r = run_experiment(noisy);
  EXPECT_GT(r.result.value, 4.0);
  EXPECT_LT(r.result.value, 8.0);
  EXPECT_EQ(r.genuine_nonlocality, std::optional<bool>(false));
  EXPECT_EQ(r.verdict, Verdict::ViolatesLR);
}

TEST(ExperimentTest, VerdictFollowsSigmaRule) {
  auto cfg = config(3, SetupId::Mermin);
  cfg.noise = NoiseModel::uniform(0.02);
  cfg.shots = 2000;
  const auto base = run_experiment(cfg);
  ASSERT_GT(base.result.value - base.lr_bound, base.result.error);
  cfg.sigma_k = (base.result.value - base.lr_bound) / base.result.error + 0.5;
  const auto strict = run_experiment(cfg);
  EXPECT_EQ(strict.result, base.result);
  EXPECT_EQ(strict.verdict, Verdict::ConsistentWithLR);
  cfg.sigma_k = (base.result.value - base.lr_bound) / base.result.error - 0.5;
  EXPECT_EQ(run_experiment(cfg).verdict, Verdict::ViolatesLR);
}

TEST(ExperimentTest, Deterministic) {
  auto cfg = config(5, SetupId::ALModified, 99);
  cfg.noise = {0.01, 0.02, 0.01};
  EXPECT_EQ(run_experiment(cfg), run_experiment(cfg));
  auto other = cfg;
  other.seed = 100;
  EXPECT_NE(run_experiment(cfg).result, run_experiment(other).result);
}

TEST(ExperimentTest, MeasurementSeedsAreDistinct) {
  const auto cfg = config(5, SetupId::Mermin, 5);
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < 16; ++i) seeds.push_back(measurement_seed(cfg, i));
  auto expanded = cfg;
  expanded.expand_permutations = true;
  for (std::size_t i = 0; i < 16; ++i) seeds.push_back(measurement_seed(expanded, i));
  auto other_setup = cfg;
  other_setup.setup = SetupId::AL;
  seeds.push_back(measurement_seed(other_setup, 0));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
}

TEST(ExperimentTest, ExpandedModeMeasuresEveryString) {
  auto cfg = config(4, SetupId::Mermin, 4);
  cfg.expand_permutations = true;
  const auto r = run_experiment(cfg);
  EXPECT_EQ(r.measurements.size(), r.polynomial.terms().size());
  EXPECT_EQ(r.verdict, Verdict::ViolatesLR);
  EXPECT_NEAR(r.result.value, 8.0, 5 * r.result.error + 1e-12);
  for (const auto& m : r.measurements) EXPECT_DOUBLE_EQ(std::abs(m.estimate.value), 1.0);
}

TEST(ReportTest, JsonRoundTrip) {
  for (auto id : kSetups) {
    auto cfg = config(4, id, 11);
    cfg.noise = {0.01, 0.02, 0.005};
    cfg.shots = 3000;
    const auto r = run_experiment(cfg);
    const auto text = render_report(r, ReportFormat::Json);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r);
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(j["verdict"], "VIOLATES_LR");
    EXPECT_TRUE(j.contains("max_term_error"));
  }
  auto expanded = config(3, SetupId::Mermin, 2);
  expanded.expand_permutations = true;
  const auto r = run_experiment(expanded);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(render_report(r, ReportFormat::Json))), r);
  EXPECT_TRUE(nlohmann::json::parse(render_report(r, ReportFormat::Json))["genuine_nonlocality"].is_null());
}

TEST(ReportTest, CsvLineCount) {
  for (int n = 3; n <= 5; ++n) {
    for (auto id : kSetups) {
      const auto r = run_experiment(config(n, id));
      const auto csv = render_report(r, ReportFormat::Csv);
      EXPECT_EQ(line_count(csv), r.classes.size() + 1);
      EXPECT_NE(csv.find(to_string(r.verdict)), std::string::npos);
    }
  }
}

TEST(ReportTest, MarkdownThreeQubitLayout) {
  const auto md = render_report(run_experiment(config(3, SetupId::Mermin)), ReportFormat::Markdown);
  EXPECT_NE(md.find("| Device | ⟨σxσxσy⟩ | ⟨σyσyσy⟩ | **Result** |"), std::string::npos);
  EXPECT_NE(md.find("Ourense (published) | 0.847 | -0.799 | **3.34**"), std::string::npos);
  EXPECT_NE(md.find("VIOLATES_LR"), std::string::npos);
}

TEST(ReportTest, MarkdownFourQubitMentionsGenuineNonlocality) {
  const auto md = render_report(run_experiment(config(4, SetupId::AL)), ReportFormat::Markdown);
  EXPECT_NE(md.find("| Device | ⟨σxσxσxσx⟩ |"), std::string::npos);
  EXPECT_NE(md.find("Genuine four-particle non-locality (result > 8): yes"), std::string::npos);
}

TEST(ReportTest, FormatNames) {
  EXPECT_EQ(format_from_string("json"), ReportFormat::Json);
  EXPECT_EQ(format_from_string("csv"), ReportFormat::Csv);
  EXPECT_EQ(format_from_string("md"), ReportFormat::Markdown);
  EXPECT_EQ(format_from_string("markdown"), ReportFormat::Markdown);
  EXPECT_THROW(format_from_string("xml"), InvalidArgument);
  EXPECT_EQ(verdict_from_string(to_string(Verdict::ConsistentWithLR)), Verdict::ConsistentWithLR);
}

TEST(ExchangeTest, NoiselessTermsAreIdentical) {
  const auto r = run_exchange_test(3, 16384, 1, NoiseModel{});
  ASSERT_EQ(r.measurements.size(), 3u);
  EXPECT_EQ(r.measurements[0].string.str(), "XXY");
  EXPECT_EQ(r.measurements[1].string.str(), "XYX");
  EXPECT_EQ(r.measurements[2].string.str(), "YXX");
  for (const auto& m : r.measurements) EXPECT_DOUBLE_EQ(m.estimate.value, 1.0);
  EXPECT_DOUBLE_EQ(r.spread, 0.0);
  EXPECT_THROW(run_exchange_test(2, 100, 0, NoiseModel{}), InvalidArgument);
}

TEST(ExchangeTest, RenderedFormats) {
  const auto r = run_exchange_test(4, 4096, 2, NoiseModel{0, 0, 0.02});
  EXPECT_EQ(r.measurements.size(), 4u);
  const auto j = nlohmann::json::parse(render_exchange(r, ReportFormat::Json));
  EXPECT_EQ(j["measurements"].size(), 4u);
  EXPECT_EQ(line_count(render_exchange(r, ReportFormat::Csv)), 5u);
  const auto md = render_exchange(run_exchange_test(3, 4096, 2, NoiseModel{}), ReportFormat::Markdown);
  EXPECT_NE(md.find("Standard deviation"), std::string::npos);
  EXPECT_NE(md.find("Vigo (published) | 0.826 | 0.801 | 0.812 | 0.012"), std::string::npos);
}

TEST(VerifyTest, InvariantSuitePasses) {
  for (const auto& c : run_invariant_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace mermin
