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

// TSV and JSON serialization of benchmark reports and analysis tables.
//
// Benchmark TSV: '#' comment lines, then a header
//   dataset  combo  P  R  F1  dF1_pct
// with one row per (dataset, combo) in run order. dF1_pct is the F1 change
// against B of the same dataset, "NA" when B is absent or its F1 is 0.
// The JSON form holds the same rows plus counts and the improvement table.

#ifndef KEYFORGE_REPORT_H_
#define KEYFORGE_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "keyforge/analyze.h"
#include "keyforge/benchmark_runner.h"

namespace keyforge {

enum class ReportFormat { kTsv, kJson };

// Throws ConfigError for anything but "tsv" or "json".
ReportFormat ParseReportFormat(std::string_view name);

// Fixed-point with `digits` decimals, independent of the global locale.
std::string FormatFixed(double value, int digits);

std::string BenchmarkToTsv(const BenchmarkReport& report);
std::string BenchmarkToJson(const BenchmarkReport& report);
// Throws FormatError on malformed input.
BenchmarkReport BenchmarkFromJson(std::string_view json);

// Columns: combo, avg_dF1_pct, improved_cases_pct.
std::string ImprovementSummary(const BenchmarkReport& report);

// Writes `stem`.tsv and `stem`.json. Throws IoError.
void EmitReport(const BenchmarkReport& report, const std::filesystem::path& stem);
void EmitReport(const BenchmarkReport& report, ReportFormat format,
                const std::filesystem::path& path);

// Long form: dataset, key, pct (displayed rows only).
std::string DistributionToTsv(std::span<const DistributionTable> tables);
// Wide form: dataset then one column per displayed row key.
std::string DistributionToWideTsv(std::span<const DistributionTable> tables);
std::string DistributionToJson(std::span<const DistributionTable> tables);

struct CoverageRow {
  std::string dataset;
  double pct = 0.0;
  size_t gold_keywords = 0;
};
std::string CoverageToTsv(std::span<const CoverageRow> rows);
std::string CoverageToJson(std::span<const CoverageRow> rows);

}  // namespace keyforge

#endif  // KEYFORGE_REPORT_H_
