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

#include <random>
#include <string>
#include <vector>

#include "keyforge/errors.h"
#include "keyforge/eval.h"
#include "oracles.h"

namespace keyforge {
namespace {

using Docs = std::vector<std::vector<std::string>>;

// Builds one document with `tp` correct of `pred` predictions and `gold`
// gold keywords, using distinct single-word keys.
void AddDoc(Docs& preds, Docs& gold, int tp, int pred, int n_gold,
            const std::string& prefix) {
  std::vector<std::string> p;
  std::vector<std::string> g;
  for (int i = 0; i < tp; ++i) {
    p.push_back(prefix + "hit" + std::string(1, 'a' + i));
    g.push_back(p.back());
  }
  for (int i = tp; i < pred; ++i) p.push_back(prefix + "miss" + std::string(1, 'a' + i));
  for (int i = tp; i < n_gold; ++i) g.push_back(prefix + "gold" + std::string(1, 'a' + i));
  preds.push_back(p);
  gold.push_back(g);
}

TEST(StemKey, Normalization) {
  EXPECT_EQ(StemKey("Neural Networks"), "neural network");
  EXPECT_EQ(StemKey("neural network"), "neural network");
  EXPECT_EQ(StemKey("  Graph  (ranking). "), "graph rank");
  EXPECT_EQ(StemKey("..."), "");
}

TEST(MatchCount, Examples) {
  std::vector<std::string> p{"neural networks"};
  std::vector<std::string> g{"neural network"};
  EXPECT_EQ(MatchCount(p, g), 1);
  std::vector<std::string> a{"graph"};
  std::vector<std::string> b{"tree"};
  EXPECT_EQ(MatchCount(a, b), 0);
  std::vector<std::string> dup{"graph", "graphs", "Graph"};
  std::vector<std::string> one{"graph"};
  EXPECT_EQ(MatchCount(dup, one), 1);
  EXPECT_EQ(MatchCount(one, dup), 1);
}

TEST(MicroPrf, HandArithmeticSingleDocument) {
  Docs preds;
  Docs gold;
  AddDoc(preds, gold, 5, 10, 8, "");
  EvalResult r = MicroPrfAtK(preds, gold);
  EXPECT_NEAR(r.precision, 0.5, 1e-9);
  EXPECT_NEAR(r.recall, 0.625, 1e-9);
  EXPECT_NEAR(r.f1, 2 * 0.5 * 0.625 / 1.125, 1e-9);
  EXPECT_NEAR(r.f1, 0.5556, 1e-4);
  EXPECT_EQ(r.tp, 5);
  EXPECT_EQ(r.n_pred, 10);
  EXPECT_EQ(r.n_gold, 8);
}

TEST(MicroPrf, HandArithmeticMicroNotMacro) {
  Docs preds;
  Docs gold;
  AddDoc(preds, gold, 2, 10, 4, "x");
  AddDoc(preds, gold, 0, 10, 4, "y");
  EvalResult two = MicroPrfAtK(preds, gold);
  EXPECT_NEAR(two.precision, 0.10, 1e-9);
  EXPECT_NEAR(two.recall, 0.25, 1e-9);
  EXPECT_NEAR(two.f1, 0.05 / 0.35, 1e-9);
  AddDoc(preds, gold, 1, 5, 2, "z");
  EvalResult three = MicroPrfAtK(preds, gold);
  EXPECT_NEAR(three.precision, 3.0 / 25.0, 1e-9);
  EXPECT_NEAR(three.recall, 3.0 / 10.0, 1e-9);
}

TEST(MicroPrf, EmptyGoldGivesZeros) {
  Docs preds{{"a", "b"}, {}};
  Docs gold{{}, {}};
  EvalResult r = MicroPrfAtK(preds, gold);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
  Docs none;
  EXPECT_EQ(MicroPrfAtK(none, none), EvalResult{});
}

TEST(MicroPrf, FromCounts) {
  EvalResult r = FromCounts(3, 25, 10);
  EXPECT_DOUBLE_EQ(r.precision, 0.12);
  EXPECT_DOUBLE_EQ(r.recall, 0.3);
  EXPECT_EQ(FromCounts(0, 0, 0), EvalResult{});
}

// 1,000 random instances (<= 5 docs, <= 6 keys) against a brute-force
// recount; exact equality.
TEST(MicroPrf, MatchesBruteForceOracle) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    oracle::PrfInstance inst = oracle::RandomPrfInstance(rng);
    EvalResult got = MicroPrfAtK(inst.predictions, inst.gold);
    EvalResult want = oracle::BruteForcePrf(inst.predictions, inst.gold);
    ASSERT_EQ(got, want) << "trial " << trial;
    EXPECT_LE(got.tp, std::min(got.n_pred, got.n_gold));
    for (double v : {got.precision, got.recall, got.f1}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

// Adding a correct, previously unmatched prediction never lowers P, R or F1.
TEST(MicroPrf, MonotoneInTruePositives) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::PrfInstance inst = oracle::RandomPrfInstance(rng);
    size_t d = rng() % inst.gold.size();
    if (inst.gold[d].empty()) continue;
    EvalResult before = MicroPrfAtK(inst.predictions, inst.gold);
    auto gold_keys = StemKeySet(inst.gold[d]);
    auto pred_keys = StemKeySet(inst.predictions[d]);
    for (const std::string& g : inst.gold[d]) {
      if (pred_keys.count(StemKey(g))) continue;
      inst.predictions[d].push_back(g);
      EvalResult after = MicroPrfAtK(inst.predictions, inst.gold);
      EXPECT_GE(after.precision, before.precision);
      EXPECT_GE(after.recall, before.recall);
      EXPECT_GE(after.f1, before.f1);
      break;
    }
  }
}

TEST(MatchCount, Symmetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::PrfInstance inst = oracle::RandomPrfInstance(rng);
    EXPECT_EQ(MatchCount(inst.predictions[0], inst.gold[0]),
              MatchCount(inst.gold[0], inst.predictions[0]));
  }
}

TEST(Improvement, PublishedExample) {
  EvalResult base;
  base.f1 = 12.13;
  EvalResult enhanced;
  enhanced.f1 = 14.32;
  EXPECT_NEAR(ImprovementPct(base, enhanced), 18.05, 0.005);
  EXPECT_DOUBLE_EQ(ImprovementPct(base, base), 0.0);
  base.precision = 0.2;
  enhanced.precision = 0.3;
  EXPECT_NEAR(ImprovementPct(base, enhanced, Metric::kPrecision), 50.0, 1e-9);
  EXPECT_THROW(ImprovementPct(EvalResult{}, enhanced), ZeroBaselineError);
  EXPECT_THROW(ImprovementPct(base, enhanced, Metric::kRecall),
               ZeroBaselineError);
}

}  // namespace
}  // namespace keyforge
