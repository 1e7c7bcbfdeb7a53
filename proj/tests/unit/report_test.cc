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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "keyforge/report.h"
#include "test_support.h"

namespace keyforge {
namespace {

using testing::TempDir;

BenchmarkReport EightComboReport() {
  BenchmarkReport r;
  r.extractor = "graph";
  r.k = 10;
  r.datasets = {"mini"};
  int i = 0;
  for (const StepSet& s : StepSet::All()) {
    r.combos.push_back(s.Name());
    r.grid[{"mini", s.Name()}] = FromCounts(2 + i, 30, 19);
    ++i;
  }
  ComputeImprovements(r);
  return r;
}

std::vector<std::string> DataRows(const std::string& tsv) {
  std::vector<std::string> rows;
  for (std::string_view line : SplitLines(tsv)) {
    if (line.empty() || line.front() == '#') continue;
    rows.emplace_back(line);
  }
  rows.erase(rows.begin());  // header
  return rows;
}

TEST(BenchmarkTsv, OneRowPerCell) {
  std::string tsv = BenchmarkToTsv(EightComboReport());
  auto rows = DataRows(tsv);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "mini\tB\t0.0667\t0.1053\t0.0816\t0.00");
  EXPECT_NE(tsv.find("dataset\tcombo\tP\tR\tF1\tdF1_pct\n"), std::string::npos);
}

TEST(BenchmarkTsv, MissingBaselineIsNA) {
  BenchmarkReport r;
  r.extractor = "statistical";
  r.datasets = {"d"};
  r.combos = {"P"};
  r.grid[{"d", "P"}] = FromCounts(1, 10, 10);
  auto rows = DataRows(BenchmarkToTsv(r));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].substr(rows[0].rfind('\t') + 1), "NA");
}

TEST(BenchmarkJson, RoundTrip) {
  BenchmarkReport r = EightComboReport();
  std::string json = BenchmarkToJson(r);
  BenchmarkReport back = BenchmarkFromJson(json);
  EXPECT_EQ(back, r);
  EXPECT_EQ(BenchmarkToJson(back), json);
  EXPECT_THROW(BenchmarkFromJson("[1, 2"), FormatError);
  EXPECT_THROW(BenchmarkFromJson("{}"), FormatError);
}

TEST(EmitReport, ByteIdenticalReruns) {
  TempDir dir;
  BenchmarkReport r = EightComboReport();
  EmitReport(r, dir.path() / "a");
  EmitReport(r, dir.path() / "b");
  EXPECT_EQ(ReadTextFile(dir.path() / "a.tsv"),
            ReadTextFile(dir.path() / "b.tsv"));
  EXPECT_EQ(ReadTextFile(dir.path() / "a.json"),
            ReadTextFile(dir.path() / "b.json"));
  EmitReport(r, ReportFormat::kJson, dir.path() / "c.json");
  EXPECT_EQ(BenchmarkFromJson(ReadTextFile(dir.path() / "c.json")), r);
  EXPECT_THROW(EmitReport(r, dir.path() / "missing" / "x" / "y"), IoError);
}

TEST(Report, FormatHelpers) {
  EXPECT_EQ(FormatFixed(0.55556, 4), "0.5556");
  EXPECT_EQ(FormatFixed(-1.0, 2), "-1.00");
  EXPECT_EQ(ParseReportFormat("json"), ReportFormat::kJson);
  EXPECT_THROW(ParseReportFormat("xml"), ConfigError);
}

TEST(Report, ImprovementSummaryListsCombos) {
  std::string s = ImprovementSummary(EightComboReport());
  EXPECT_NE(s.find("PTW"), std::string::npos);
  EXPECT_EQ(s.find("\nB\t"), std::string::npos);
}

TEST(Report, DistributionAndCoverageTables) {
  DistributionTable t;
  t.name = "mini";
  t.rows = {{"NN", 60.0}, {"JJ NN", 40.0}};
  t.full = t.rows;
  t.total_items = 5;
  std::vector<DistributionTable> tables{t};
  EXPECT_EQ(DistributionToTsv(tables),
            "dataset\tkey\tpct\nmini\tNN\t60.00\nmini\tJJ NN\t40.00\n");
  std::string wide = DistributionToWideTsv(tables);
  EXPECT_EQ(wide, "dataset\tNN\tJJ NN\nmini\t60.00\t40.00\n");
  EXPECT_NE(DistributionToJson(tables).find("\"JJ NN\""), std::string::npos);
  std::vector<CoverageRow> rows{{"mini", 50.0, 4}};
  EXPECT_EQ(CoverageToTsv(rows), "dataset\tcoverage_pct\tgold_keywords\nmini\t50.00\t4\n");
  EXPECT_NE(CoverageToJson(rows).find("\"mini\""), std::string::npos);
}

}  // namespace
}  // namespace keyforge
