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

#include "keyforge/analyze.h"

#include <algorithm>
#include <array>
#include <map>

#include "keyforge/io.h"

namespace keyforge {
namespace {

size_t WhitespaceTokens(std::string_view s) {
  size_t n = 0;
  bool in_word = false;
  for (char c : s) {
    if (IsAsciiSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

std::vector<DistributionRow> SortedRows(const std::map<std::string, double>& pct) {
  std::vector<DistributionRow> rows;
  for (const auto& [key, value] : pct) rows.push_back({key, value});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DistributionRow& a, const DistributionRow& b) {
                     return a.pct > b.pct;
                   });
  return rows;
}

void Display(DistributionTable& table, size_t top_n) {
  table.rows.assign(table.full.begin(),
                    table.full.begin() + std::min(top_n, table.full.size()));
}

}  // namespace

DistributionTable PosPatternDistribution(const KeDataset& ds,
                                         const TextProcessor& text,
                                         size_t top_n) {
  std::map<std::string, size_t> counts;
  size_t total = 0;
  for (const auto& [id, keys] : ds.gold) {
    for (const std::string& key : keys) {
      std::vector<PosTag> tags;
      for (const TaggedToken& t : text.AnnotatePhrase(key)) tags.push_back(t.tag);
      if (tags.empty()) continue;
      ++counts[TagSequenceName(tags)];
      ++total;
    }
  }
  DistributionTable table;
  table.name = ds.name;
  table.total_items = total;
  if (total == 0) return table;
  std::map<std::string, double> pct;
  for (const auto& [key, n] : counts) pct[key] = 100.0 * n / total;
  table.full = SortedRows(pct);
  Display(table, top_n);
  return table;
}

DistributionTable NgramDistribution(const KeDataset& ds) {
  std::array<size_t, 4> buckets{};
  size_t total = 0;
  for (const auto& [id, keys] : ds.gold) {
    for (const std::string& key : keys) {
      size_t n = WhitespaceTokens(key);
      if (n == 0) continue;
      ++buckets[std::min<size_t>(n, 4) - 1];
      ++total;
    }
  }
  DistributionTable table;
  table.name = ds.name;
  table.total_items = total;
  auto pct = [total](size_t count) {
    return total == 0 ? 0.0 : 100.0 * count / total;
  };
  for (size_t b = 0; b < 4; ++b) {
    table.full.push_back({kNgramColumns[b], pct(buckets[b])});
  }
  table.rows = table.full;
  table.rows.push_back({kNgramColumns[4], pct(buckets[0] + buckets[1])});
  table.rows.push_back(
      {kNgramColumns[5], pct(buckets[0] + buckets[1] + buckets[2])});
  return table;
}

double WikiCoverage(const KeDataset& ds, const EntityGazetteer& gazetteer,
                    const TextProcessor& text) {
  size_t total = 0;
  size_t covered = 0;
  for (const auto& [id, keys] : ds.gold) {
    for (const std::string& key : keys) {
      ++total;
      if (gazetteer.Contains(text.Canonicalize(key))) ++covered;
    }
  }
  return total == 0 ? 0.0 : 100.0 * covered / total;
}

DistributionTable AverageDistributions(std::span<const DistributionTable> tables,
                                       size_t top_n) {
  DistributionTable avg;
  avg.name = "average";
  if (tables.empty()) return avg;
  std::map<std::string, double> sum;
  for (const DistributionTable& t : tables) {
    avg.total_items += t.total_items;
    for (const DistributionRow& r : t.full) sum[r.key] += r.pct;
  }
  for (auto& [key, value] : sum) value /= tables.size();
  avg.full = SortedRows(sum);
  Display(avg, top_n);
  return avg;
}

}  // namespace keyforge
