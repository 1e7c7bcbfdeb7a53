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

// Micro-averaged precision, recall and F1 at k with stemmed exact matching.

#ifndef KEYFORGE_EVAL_H_
#define KEYFORGE_EVAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace keyforge {

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int64_t tp = 0;
  int64_t n_pred = 0;
  int64_t n_gold = 0;

  bool operator==(const EvalResult&) const = default;
};

// Lowercase, tokenize, drop punctuation tokens, Porter-stem each token and
// join with single spaces: "Neural Networks" -> "neural network".
std::string StemKey(std::string_view phrase);

// Distinct non-empty stem keys of `phrases`.
std::unordered_set<std::string> StemKeySet(std::span<const std::string> phrases);

// |stem set of predicted ∩ stem set of gold|.
int64_t MatchCount(std::span<const std::string> predicted,
                   std::span<const std::string> gold);

// P = Σtp / Σ|pred|, R = Σtp / Σ|gold|, both sides deduplicated by stem key
// per document; F1 is their harmonic mean. Zero denominators give 0.
EvalResult MicroPrfAtK(std::span<const std::vector<std::string>> predictions,
                       std::span<const std::vector<std::string>> gold);

// Builds an EvalResult from pooled counts.
EvalResult FromCounts(int64_t tp, int64_t n_pred, int64_t n_gold);

enum class Metric { kPrecision, kRecall, kF1 };

// 100 * (enhanced - base) / base for the chosen metric. Throws
// ZeroBaselineError when the base metric is 0.
double ImprovementPct(const EvalResult& base, const EvalResult& enhanced,
                      Metric metric = Metric::kF1);

}  // namespace keyforge

#endif  // KEYFORGE_EVAL_H_
