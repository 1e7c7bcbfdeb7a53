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

#include "keyforge/eval.h"

#include <algorithm>

#include "keyforge/errors.h"
#include "keyforge/porter.h"
#include "keyforge/text.h"

namespace keyforge {
namespace {

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double MetricOf(const EvalResult& r, Metric m) {
  switch (m) {
    case Metric::kPrecision:
      return r.precision;
    case Metric::kRecall:
      return r.recall;
    case Metric::kF1:
      break;
  }
  return r.f1;
}

}  // namespace

std::string StemKey(std::string_view phrase) {
  std::string key;
  for (const Token& t : Tokenize(phrase)) {
    if (IsPunctuationToken(t.surface)) continue;
    if (!key.empty()) key += ' ';
    key += PorterStem(t.surface);
  }
  return key;
}

std::unordered_set<std::string> StemKeySet(
    std::span<const std::string> phrases) {
  std::unordered_set<std::string> keys;
  for (const std::string& p : phrases) {
    std::string key = StemKey(p);
    if (!key.empty()) keys.insert(std::move(key));
  }
  return keys;
}

int64_t MatchCount(std::span<const std::string> predicted,
                   std::span<const std::string> gold) {
  auto pred = StemKeySet(predicted);
  auto truth = StemKeySet(gold);
  return std::count_if(pred.begin(), pred.end(), [&truth](const std::string& k) {
    return truth.count(k) > 0;
  });
}

EvalResult FromCounts(int64_t tp, int64_t n_pred, int64_t n_gold) {
  EvalResult r;
  r.tp = tp;
  r.n_pred = n_pred;
  r.n_gold = n_gold;
  r.precision = Ratio(tp, n_pred);
  r.recall = Ratio(tp, n_gold);
  double sum = r.precision + r.recall;
  r.f1 = sum > 0.0 ? 2.0 * r.precision * r.recall / sum : 0.0;
  return r;
}

EvalResult MicroPrfAtK(std::span<const std::vector<std::string>> predictions,
                       std::span<const std::vector<std::string>> gold) {
  if (predictions.size() != gold.size()) {
    throw Error("prediction and gold document counts differ");
  }
  int64_t tp = 0;
  int64_t n_pred = 0;
  int64_t n_gold = 0;
  for (size_t d = 0; d < predictions.size(); ++d) {
    auto pred = StemKeySet(predictions[d]);
    auto truth = StemKeySet(gold[d]);
    for (const std::string& k : pred) tp += truth.count(k);
    n_pred += static_cast<int64_t>(pred.size());
    n_gold += static_cast<int64_t>(truth.size());
  }
  return FromCounts(tp, n_pred, n_gold);
}

double ImprovementPct(const EvalResult& base, const EvalResult& enhanced,
                      Metric metric) {
  double b = MetricOf(base, metric);
  if (b == 0.0) throw ZeroBaselineError("baseline metric is zero");
  return 100.0 * (MetricOf(enhanced, metric) - b) / b;
}

}  // namespace keyforge
