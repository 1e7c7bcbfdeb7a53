// Copyright 2026 The Keyforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "keyforge/report.h"

#include <cmath>
#include <cstdio>
#include <optional>

#include "json.hpp"
#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

using nlohmann::ordered_json;

constexpr char kAbsentKeysNote[] =
    "gold keywords absent from a document stay in the recall denominator "
    "and are never matched";
constexpr char kMatchingNote[] =
    "matching: Porter-stemmed exact match, predictions and gold deduplicated "
    "per document, micro-averaged";

std::optional<double> DeltaF1(const BenchmarkReport& report,
                              const std::string& dataset,
                              const std::string& combo) {
  auto base = report.grid.find({dataset, "B"});
  if (base == report.grid.end() || base->second.f1 == 0.0) return std::nullopt;
  return ImprovementPct(base->second, report.At(dataset, combo));
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "json") return ReportFormat::kJson;
  throw ConfigError("unknown report format '" + std::string(name) +
                    "' (expected tsv or json)");
}

std::string FormatFixed(double value, int digits) {
  if (value == 0.0) value = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string BenchmarkToTsv(const BenchmarkReport& report) {
  std::string out;
  out += "# extractor=" + report.extractor + " k=" + std::to_string(report.k) +
         "\n";
  out += std::string("# ") + kMatchingNote + "\n";
  out += std::string("# ") + kAbsentKeysNote + "\n";
  out += "dataset\tcombo\tP\tR\tF1\tdF1_pct\n";
  for (const std::string& ds : report.datasets) {
    for (const std::string& combo : report.combos) {
      const EvalResult& r = report.At(ds, combo);
      auto delta = DeltaF1(report, ds, combo);
      out += ds + "\t" + combo + "\t" + FormatFixed(r.precision, 4) + "\t" +
             FormatFixed(r.recall, 4) + "\t" + FormatFixed(r.f1, 4) + "\t" +
             (delta ? FormatFixed(*delta, 2) : "NA") + "\n";
    }
  }
  return out;
}

std::string BenchmarkToJson(const BenchmarkReport& report) {
  ordered_json rows = ordered_json::array();
  for (const std::string& ds : report.datasets) {
    for (const std::string& combo : report.combos) {
      const EvalResult& r = report.At(ds, combo);
      auto delta = DeltaF1(report, ds, combo);
      rows.push_back({{"dataset", ds},
                      {"combo", combo},
                      {"precision", r.precision},
                      {"recall", r.recall},
                      {"f1", r.f1},
                      {"tp", r.tp},
                      {"n_pred", r.n_pred},
                      {"n_gold", r.n_gold},
                      {"delta_f1_pct", delta ? ordered_json(*delta)
                                             : ordered_json(nullptr)}});
    }
  }
  ordered_json improvements = ordered_json::array();
  for (const std::string& combo : report.combos) {
    auto it = report.improvements.find(combo);
    if (it == report.improvements.end()) continue;
    improvements.push_back(
        {{"combo", combo},
         {"avg_delta_f1_pct", it->second.avg_delta_f1_pct},
         {"improved_cases_pct", it->second.improved_cases_pct},
         {"datasets_averaged", it->second.datasets_averaged}});
  }
  ordered_json doc = {{"extractor", report.extractor},
                      {"k", report.k},
                      {"datasets", report.datasets},
                      {"combos", report.combos},
                      {"footnotes", {kMatchingNote, kAbsentKeysNote}},
                      {"rows", rows},
                      {"improvements", improvements}};
  return doc.dump(2) + "\n";
}

BenchmarkReport BenchmarkFromJson(std::string_view text) {
  try {
    ordered_json doc = ordered_json::parse(text);
    BenchmarkReport report;
    report.extractor = doc.at("extractor").get<std::string>();
    report.k = doc.at("k").get<size_t>();
    report.datasets = doc.at("datasets").get<std::vector<std::string>>();
    report.combos = doc.at("combos").get<std::vector<std::string>>();
    for (const auto& row : doc.at("rows")) {
      EvalResult r;
      r.precision = row.at("precision").get<double>();
      r.recall = row.at("recall").get<double>();
      r.f1 = row.at("f1").get<double>();
      r.tp = row.at("tp").get<int64_t>();
      r.n_pred = row.at("n_pred").get<int64_t>();
      r.n_gold = row.at("n_gold").get<int64_t>();
      report.grid[{row.at("dataset").get<std::string>(),
                   row.at("combo").get<std::string>()}] = r;
    }
    for (const auto& imp : doc.at("improvements")) {
      Improvement i;
      i.avg_delta_f1_pct = imp.at("avg_delta_f1_pct").get<double>();
      i.improved_cases_pct = imp.at("improved_cases_pct").get<double>();
      i.datasets_averaged = imp.at("datasets_averaged").get<int>();
      report.improvements[imp.at("combo").get<std::string>()] = i;
    }
    return report;
  } catch (const ordered_json::exception& e) {
    throw FormatError(std::string("malformed benchmark report: ") + e.what());
  }
}

std::string ImprovementSummary(const BenchmarkReport& report) {
  std::string out = "combo\tavg_dF1_pct\timproved_cases_pct\n";
  for (const std::string& combo : report.combos) {
    auto it = report.improvements.find(combo);
    if (it == report.improvements.end()) continue;
    out += combo + "\t" +
           (it->second.datasets_averaged > 0
                ? FormatFixed(it->second.avg_delta_f1_pct, 2)
                : std::string("NA")) +
           "\t" + FormatFixed(it->second.improved_cases_pct, 2) + "\n";
  }
  return out;
}

void EmitReport(const BenchmarkReport& report, ReportFormat format,
                const std::filesystem::path& path) {
  WriteTextFile(path, format == ReportFormat::kTsv ? BenchmarkToTsv(report)
                                                   : BenchmarkToJson(report));
}

void EmitReport(const BenchmarkReport& report,
                const std::filesystem::path& stem) {
  std::filesystem::path base = stem;
  EmitReport(report, ReportFormat::kTsv, base.replace_extension(".tsv"));
  EmitReport(report, ReportFormat::kJson, base.replace_extension(".json"));
}

std::string DistributionToTsv(std::span<const DistributionTable> tables) {
  std::string out = "dataset\tkey\tpct\n";
  for (const DistributionTable& t : tables) {
    for (const DistributionRow& r : t.rows) {
      out += t.name + "\t" + r.key + "\t" + FormatFixed(r.pct, 2) + "\n";
    }
  }
  return out;
}

std::string DistributionToWideTsv(std::span<const DistributionTable> tables) {
  std::string out = "dataset";
  if (!tables.empty()) {
    for (const DistributionRow& r : tables.front().rows) out += "\t" + r.key;
  }
  out += "\n";
  for (const DistributionTable& t : tables) {
    out += t.name;
    for (const DistributionRow& r : t.rows) out += "\t" + FormatFixed(r.pct, 2);
    out += "\n";
  }
  return out;
}

std::string DistributionToJson(std::span<const DistributionTable> tables) {
  auto rows_json = [](const std::vector<DistributionRow>& rows) {
    ordered_json a = ordered_json::array();
    for (const DistributionRow& r : rows) {
      a.push_back({{"key", r.key}, {"pct", r.pct}});
    }
    return a;
  };
  ordered_json a = ordered_json::array();
  for (const DistributionTable& t : tables) {
    a.push_back({{"dataset", t.name},
                 {"total_items", t.total_items},
                 {"rows", rows_json(t.rows)},
                 {"full", rows_json(t.full)}});
  }
  return ordered_json({{"tables", a}}).dump(2) + "\n";
}

std::string CoverageToTsv(std::span<const CoverageRow> rows) {
  std::string out = "dataset\tcoverage_pct\tgold_keywords\n";
  for (const CoverageRow& r : rows) {
    out += r.dataset + "\t" + FormatFixed(r.pct, 2) + "\t" +
           std::to_string(r.gold_keywords) + "\n";
  }
  return out;
}

std::string CoverageToJson(std::span<const CoverageRow> rows) {
  ordered_json a = ordered_json::array();
  for (const CoverageRow& r : rows) {
    a.push_back({{"dataset", r.dataset},
                 {"coverage_pct", r.pct},
                 {"gold_keywords", r.gold_keywords}});
  }
  return ordered_json({{"coverage", a}}).dump(2) + "\n";
}

}  // namespace keyforge
