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

// Runs every step combination over datasets and collects the P/R/F1 grid.

#ifndef KEYFORGE_BENCHMARK_RUNNER_H_
#define KEYFORGE_BENCHMARK_RUNNER_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/eval.h"
#include "keyforge/postprocess.h"

namespace keyforge {

// Thesaurus for one document; nullptr means none.
using ThesaurusSelector =
    std::function<const Thesaurus*(const DatasetDocument&)>;

struct BenchmarkDataset {
  const KeDataset* dataset = nullptr;
  // Required when a combination includes T.
  ThesaurusSelector thesaurus;
};

// Selector returning `thesaurus` for every document (manual context).
ThesaurusSelector FixedThesaurus(const Thesaurus* thesaurus);

struct Improvement {
  double avg_delta_f1_pct = 0.0;   // mean over datasets with nonzero B F1
  double improved_cases_pct = 0.0; // datasets with strictly higher F1
  int datasets_averaged = 0;

  bool operator==(const Improvement&) const = default;
};

struct BenchmarkReport {
  std::string extractor;
  size_t k = 10;
  std::vector<std::string> datasets;  // run order
  std::vector<std::string> combos;    // run order
  std::map<std::pair<std::string, std::string>, EvalResult> grid;
  std::map<std::string, Improvement> improvements;  // every combo except B

  const EvalResult& At(const std::string& dataset,
                       const std::string& combo) const;
  bool operator==(const BenchmarkReport&) const = default;
};

struct BenchmarkOptions {
  ExtractorKind extractor = ExtractorKind::kStatistical;
  std::vector<StepSet> combos = StepSet::All();
  size_t k = 10;
  int jobs = 1;
};

// Scores every document once, applies each combination and evaluates.
// `resources.thesaurus` is ignored; the dataset's selector supplies it.
// Results do not depend on `jobs`. Throws MissingResourceError when a
// combination lacks its resource.
BenchmarkReport RunBenchmark(const std::vector<BenchmarkDataset>& datasets,
                             const PipelineResources& resources,
                             const BenchmarkOptions& options);

// Improvement statistics of every non-baseline combo against B.
void ComputeImprovements(BenchmarkReport& report);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// by index is rethrown after all workers finish.
void ParallelFor(size_t n, int jobs, const std::function<void(size_t)>& fn);

}  // namespace keyforge

#endif  // KEYFORGE_BENCHMARK_RUNNER_H_
