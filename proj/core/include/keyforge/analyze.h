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

// Corpus analyses over gold keywords: PoS patterns, n-gram sizes and
// Wikipedia coverage.

#ifndef KEYFORGE_ANALYZE_H_
#define KEYFORGE_ANALYZE_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/document.h"

namespace keyforge {

struct DistributionRow {
  std::string key;
  double pct = 0.0;

  bool operator==(const DistributionRow&) const = default;
};

struct DistributionTable {
  std::string name;                  // dataset name
  std::vector<DistributionRow> rows; // displayed rows
  std::vector<DistributionRow> full; // complete distribution, sums to 100
  size_t total_items = 0;

  bool operator==(const DistributionTable&) const = default;
};

// Every gold keyword tagged on its own; key = space-joined tag names.
// Rows ordered by percentage descending, then key; the top `top_n` are
// displayed.
DistributionTable PosPatternDistribution(const KeDataset& ds,
                                         const TextProcessor& text,
                                         size_t top_n = 10);

inline constexpr const char* kNgramColumns[] = {"n=1",  "n=2",  "n=3",
                                                "n>=4", "n<=2", "n<=3"};

// n = whitespace token count of the raw gold string. Rows are the six
// columns above; `full` holds the four disjoint buckets.
DistributionTable NgramDistribution(const KeDataset& ds);

// Percentage of gold keywords whose canonical form is a gazetteer title.
double WikiCoverage(const KeDataset& ds, const EntityGazetteer& gazetteer,
                    const TextProcessor& text);

// Key-wise mean of the `full` distributions (missing keys count as 0),
// ordered like PosPatternDistribution and cut to `top_n` displayed rows.
DistributionTable AverageDistributions(std::span<const DistributionTable> tables,
                                       size_t top_n);

}  // namespace keyforge

#endif  // KEYFORGE_ANALYZE_H_
