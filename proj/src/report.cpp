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

#include <charconv>
#include <cstdio>
#include <sstream>

#include "mermin/errors.hpp"
#include "mermin/experiment.hpp"

namespace mermin {

using nlohmann::json;

ReportFormat format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  throw InvalidArgument("unknown format '" + name + "' (expected json, csv or md)");
}

namespace {

// Shortest representation that round-trips.
std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

json estimate_json(const Estimate& e) {
  return {{"value", e.value}, {"error", e.error}, {"error_display", display_error(e.error)}};
}

Estimate estimate_from(const json& j) {
  return {j.at("value").get<double>(), j.at("error").get<double>()};
}

json noise_json(const NoiseModel& m) {
  return {{"single_qubit", m.single_qubit}, {"two_qubit", m.two_qubit}, {"readout", m.readout}};
}

NoiseModel noise_from(const json& j) {
  return {j.at("single_qubit").get<double>(), j.at("two_qubit").get<double>(),
          j.at("readout").get<double>()};
}

json measurement_json(const Measurement& m) {
  json j = estimate_json(m.estimate);
  j["axes"] = m.string.str();
  j["circuit"] = circuit_to_json(m.circuit);
  j["seed"] = m.seed;
  j["counts"] = m.counts.to_json();
  return j;
}

Measurement measurement_from(int n, const json& j) {
  return {PauliString::from_string(j.at("axes").get<std::string>()),
          circuit_from_json(n, j.at("circuit")), j.at("seed").get<std::uint64_t>(),
          ShotCounts::from_json(j.at("counts")), estimate_from(j)};
}

json published_json(const PublishedTable& t, const PublishedSummary& s) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"machine", r.machine}, {"terms", r.terms}, {"result", r.result}});
  auto value = [](const std::optional<PublishedValue>& v) -> json {
    if (!v) return nullptr;
    return {{"value", v->value}, {"error", v->error}};
  };
  return {{"table",
           {{"qubits", t.num_qubits},
            {"setup", to_string(t.setup)},
            {"term_error", t.term_error},
            {"result_error", t.result_error},
            {"rows", std::move(rows)}}},
          {"summary",
           {{"label", s.label},
            {"lr_bound", s.lr_bound},
            {"qm_value", s.qm_value},
            {"alsina_latorre", value(s.alsina_latorre)},
            {"garcia_martin_sierra", value(s.garcia_martin_sierra)},
            {"best", {{"value", s.best.value}, {"error", s.best.error}}}}}};
}

std::pair<PublishedTable, PublishedSummary> published_from(const json& j) {
  const json& t = j.at("table");
  PublishedTable table{t.at("qubits").get<int>(), setup_from_string(t.at("setup").get<std::string>()),
                       t.at("term_error").get<double>(), t.at("result_error").get<double>(), {}};
  for (const auto& r : t.at("rows")) {
    table.rows.push_back({r.at("machine").get<std::string>(), r.at("terms").get<std::vector<double>>(),
                          r.at("result").get<double>()});
  }
  const json& s = j.at("summary");
  auto value = [](const json& v) -> std::optional<PublishedValue> {
    if (v.is_null()) return std::nullopt;
    return PublishedValue{v.at("value").get<double>(), v.at("error").get<double>()};
  };
  PublishedSummary summary{s.at("label").get<std::string>(),
                           s.at("lr_bound").get<double>(),
                           s.at("qm_value").get<double>(),
                           value(s.at("alsina_latorre")),
                           value(s.at("garcia_martin_sierra")),
                           {s.at("best").at("value").get<double>(), s.at("best").at("error").get<double>()}};
  return {std::move(table), std::move(summary)};
}

std::string term_label(const PauliString& p) {
  std::string s = "⟨";
  for (Axis a : p.axes()) s += a == Axis::X ? "σx" : "σy";
  return s + "⟩";
}

std::string render_csv(const ExperimentReport& r) {
  std::ostringstream out;
  for (const auto& c : r.classes) {
    out << "term," << c.representative.str() << ',' << c.symmetry.y_count << ','
        << coefficient_text(c.symmetry.coefficient) << ',' << c.symmetry.multiplicity << ','
        << shortest(c.estimate.value) << ',' << shortest(c.estimate.error) << ','
        << shortest(display_error(c.estimate.error)) << ",,,\n";
  }
  out << "polynomial," << r.polynomial.name() << ",,,," << shortest(r.result.value) << ','
      << shortest(r.result.error) << ',' << shortest(display_error(r.result.error)) << ','
      << shortest(r.lr_bound) << ',' << shortest(r.qm_value) << ',' << to_string(r.verdict) << '\n';
  return out.str();
}

std::string render_markdown(const ExperimentReport& r) {
  std::ostringstream out;
  const auto& cfg = r.config;
  out << "### " << cfg.num_qubits << " qubits, setup " << to_string(cfg.setup) << ": "
      << r.polynomial.name() << "\n\n";
  out << "GHZ phase " << fixed(r.ghz_phase, 4) << " rad, " << cfg.shots << " shots per circuit, seed "
      << cfg.seed << ", noise (" << shortest(cfg.noise.single_qubit) << ", "
      << shortest(cfg.noise.two_qubit) << ", " << shortest(cfg.noise.readout) << ")\n\n";

  out << "| Device |";
  for (const auto& c : r.classes) out << ' ' << term_label(c.representative) << " |";
  out << " **Result** |\n|---|";
  for (std::size_t i = 0; i < r.classes.size(); ++i) out << "---|";
  out << "---|\n";

  const double term_err = display_error(r.max_term_error);
  const double result_err = display_error(r.result.error);
  out << "| |";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    out << " ±" << fixed(term_err, display_decimals(term_err)) << " |";
  }
  out << " **±" << fixed(result_err, display_decimals(result_err)) << "** |\n";

  out << "| simulator |";
  for (const auto& c : r.classes) out << ' ' << fixed(c.estimate.value, 3) << " |";
  out << " **" << fixed(r.result.value, 2) << "** |\n";

  for (const auto& row : r.published.rows) {
    out << "| " << row.machine << " (published) |";
    for (double v : row.terms) out << ' ' << fixed(v, 3) << " |";
    out << " **" << fixed(row.result, 2) << "** |\n";
  }

  out << "\nPublished columns carry ±" << fixed(r.published.term_error, 3) << " per term and ±"
      << fixed(r.published.result_error, 2) << " on the result.\n\n";
  out << "LR bound " << shortest(r.lr_bound) << ", QM value " << fixed(r.qm_value, 4)
      << ". Verdict: **" << to_string(r.verdict) << "** (value - " << shortest(cfg.sigma_k)
      << "σ vs LR bound).\n";
  if (r.genuine_nonlocality) {
    out << "Genuine four-particle non-locality (result > 8): "
        << (*r.genuine_nonlocality ? "yes" : "no") << ".\n";
  }
  return out.str();
}

}  // namespace

json report_to_json(const ExperimentReport& r) {
  const auto& cfg = r.config;
  json classes = json::array();
  for (const auto& c : r.classes) {
    json j = estimate_json(c.estimate);
    j["y_count"] = c.symmetry.y_count;
    j["coefficient"] = coefficient_to_json(c.symmetry.coefficient);
    j["multiplicity"] = c.symmetry.multiplicity;
    j["representative"] = c.representative.str();
    classes.push_back(std::move(j));
  }
  json measurements = json::array();
  for (const auto& m : r.measurements) measurements.push_back(measurement_json(m));

  return {{"schema_version", kReportSchemaVersion},
          {"config",
           {{"qubits", cfg.num_qubits},
            {"setup", to_string(cfg.setup)},
            {"shots", cfg.shots},
            {"seed", cfg.seed},
            {"noise", noise_json(cfg.noise)},
            {"expand_permutations", cfg.expand_permutations},
            {"sigma_k", cfg.sigma_k}}},
          {"ghz_phase", r.ghz_phase},
          {"polynomial", polynomial_to_json(r.polynomial)},
          {"classes", std::move(classes)},
          {"measurements", std::move(measurements)},
          {"result", estimate_json(r.result)},
          {"lr_bound", r.lr_bound},
          {"qm_value", r.qm_value},
          {"verdict", to_string(r.verdict)},
          {"genuine_nonlocality", r.genuine_nonlocality ? json(*r.genuine_nonlocality) : json(nullptr)},
          {"max_term_error", r.max_term_error},
          {"published_reference", published_json(r.published, r.published_summary)}};
}

ExperimentReport report_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw InvalidArgument("unsupported report schema version");
  }
  const json& c = j.at("config");
  ExperimentConfig cfg{c.at("qubits").get<int>(),
                       setup_from_string(c.at("setup").get<std::string>()),
                       c.at("shots").get<std::uint64_t>(),
                       c.at("seed").get<std::uint64_t>(),
                       noise_from(c.at("noise")),
                       c.at("expand_permutations").get<bool>(),
                       c.at("sigma_k").get<double>()};
  const int n = cfg.num_qubits;

  std::vector<ClassResult> classes;
  for (const auto& k : j.at("classes")) {
    classes.push_back({{k.at("y_count").get<int>(), coefficient_from_json(k.at("coefficient")),
                        k.at("multiplicity").get<int>()},
                       PauliString::from_string(k.at("representative").get<std::string>()),
                       estimate_from(k)});
  }
  std::vector<Measurement> measurements;
  for (const auto& m : j.at("measurements")) measurements.push_back(measurement_from(n, m));

  auto [table, summary] = published_from(j.at("published_reference"));
  const json& g = j.at("genuine_nonlocality");
  return ExperimentReport{
      .config = cfg,
      .ghz_phase = j.at("ghz_phase").get<double>(),
      .polynomial = polynomial_from_json(j.at("polynomial")),
      .classes = std::move(classes),
      .measurements = std::move(measurements),
      .result = estimate_from(j.at("result")),
      .lr_bound = j.at("lr_bound").get<double>(),
      .qm_value = j.at("qm_value").get<double>(),
      .verdict = verdict_from_string(j.at("verdict").get<std::string>()),
      .genuine_nonlocality = g.is_null() ? std::nullopt : std::optional<bool>(g.get<bool>()),
      .max_term_error = j.at("max_term_error").get<double>(),
      .published = std::move(table),
      .published_summary = std::move(summary),
  };
}

std::string render_report(const ExperimentReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(r);
    case ReportFormat::Markdown: return render_markdown(r);
  }
  throw InvalidArgument("unknown report format");
}

json exchange_to_json(const ExchangeTestReport& r) {
  json measurements = json::array();
  for (const auto& m : r.measurements) measurements.push_back(measurement_json(m));
  json published = json::array();
  if (r.num_qubits == 3) {
    for (const auto& row : published_exchange_rows()) {
      published.push_back({{"machine", row.machine}, {"values", row.values}, {"spread", row.spread}});
    }
  }
  return {{"schema_version", kReportSchemaVersion},
          {"qubits", r.num_qubits},
          {"shots", r.shots},
          {"seed", r.seed},
          {"noise", noise_json(r.noise)},
          {"measurements", std::move(measurements)},
          {"spread", r.spread},
          {"max_term_error", r.max_term_error},
          {"published_reference", std::move(published)}};
}

std::string render_exchange(const ExchangeTestReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return exchange_to_json(r).dump(2) + "\n";
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    for (const auto& m : r.measurements) {
      out << "term," << m.string.str() << ',' << shortest(m.estimate.value) << ','
          << shortest(m.estimate.error) << '\n';
    }
    out << "spread,," << shortest(r.spread) << ',' << shortest(r.max_term_error) << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << "### Qubit exchange invariance, " << r.num_qubits << " qubits\n\n| Device |";
  for (const auto& m : r.measurements) out << ' ' << term_label(m.string) << " |";
  out << " Standard deviation |\n|---|";
  for (std::size_t i = 0; i < r.measurements.size(); ++i) out << "---|";
  out << "---|\n| simulator |";
  for (const auto& m : r.measurements) out << ' ' << fixed(m.estimate.value, 3) << " |";
  out << ' ' << fixed(r.spread, 3) << " |\n";
  if (r.num_qubits == 3) {
    for (const auto& row : published_exchange_rows()) {
      out << "| " << row.machine << " (published) |";
      for (double v : row.values) out << ' ' << fixed(v, 3) << " |";
      out << ' ' << fixed(row.spread, 3) << " |\n";
    }
  }
  const double e = display_error(r.max_term_error);
  out << "\nPer-term error ±" << fixed(e, display_decimals(e)) << " (raw max "
      << shortest(r.max_term_error) << "). Invariance holds when the spread stays below it.\n";
  return out.str();
}

}  // namespace mermin
