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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "keyforge/extract.h"
#include "test_support.h"

namespace keyforge {
namespace {

using testing::DefaultConfig;
using testing::FixtureDir;
using testing::Text;

std::set<std::string> Phrases(const std::vector<CandidateKeyword>& cands) {
  std::set<std::string> out;
  for (const auto& c : cands) out.insert(c.phrase);
  return out;
}

TEST(Candidates, EnumeratesContiguousNgrams) {
  Document doc = Text().Process("keyword extraction works");
  auto cands = GenerateCandidates(doc, DefaultConfig());
  EXPECT_EQ(Phrases(cands),
            (std::set<std::string>{"keyword", "extraction", "works",
                                   "keyword extraction", "extraction works",
                                   "keyword extraction works"}));
}

TEST(Candidates, StopwordsBlockNgrams) {
  Document doc = Text().Process("quality of service");
  auto cands = GenerateCandidates(doc, DefaultConfig());
  EXPECT_EQ(Phrases(cands), (std::set<std::string>{"quality", "service"}));
}

TEST(Candidates, NoCandidateSpansSentences) {
  Document doc = Text().Process("We rank the graph. Based methods win.");
  for (const auto& c : GenerateCandidates(doc, DefaultConfig())) {
    EXPECT_EQ(c.phrase.find("graph Based"), std::string::npos);
  }
}

TEST(Candidates, ExcludesNumbersAndPunctuationKeepsMixed) {
  Document doc = Text().Process("In 2001 the 5G networks — fast — won.");
  auto phrases = Phrases(GenerateCandidates(doc, DefaultConfig()));
  EXPECT_TRUE(phrases.count("5G networks"));
  for (const auto& p : phrases) {
    EXPECT_EQ(p.find("2001"), std::string::npos);
    EXPECT_EQ(p.find("\xE2\x80\x94"), std::string::npos);
  }
}

TEST(Candidates, CollapseByStemAndKeepOccurrences) {
  Document doc =
      Text().Process("Graph models help. The graph model works. Graphs win.");
  auto cands = GenerateCandidates(doc, DefaultConfig());
  auto it = std::find_if(cands.begin(), cands.end(), [](const auto& c) {
    return c.key == "graph model";
  });
  ASSERT_NE(it, cands.end());
  EXPECT_EQ(it->phrase, "Graph models");
  EXPECT_EQ(it->occurrences.size(), 2u);
  auto graph = std::find_if(cands.begin(), cands.end(),
                            [](const auto& c) { return c.key == "graph"; });
  ASSERT_NE(graph, cands.end());
  EXPECT_EQ(graph->occurrences.size(), 3u);
  EXPECT_EQ(graph->tag_sequences.size(), 2u);  // NNP/NN and NNS forms
}

// Every candidate is a contiguous token run inside one sentence.
TEST(Candidates, Closure) {
  Document doc = Text().Process(ReadTextFile(
      FixtureDir() / "mini" / "docsutf8" / "doc1.txt"));
  auto cfg = DefaultConfig();
  for (const auto& c : GenerateCandidates(doc, cfg)) {
    ASSERT_GE(c.size(), 1u);
    ASSERT_LE(c.size(), 3u);
    for (size_t start : c.occurrences) {
      int sentence = doc.tokens[start].token.sentence_index;
      for (size_t j = 0; j < c.size(); ++j) {
        ASSERT_LT(start + j, doc.tokens.size());
        EXPECT_EQ(doc.tokens[start + j].token.sentence_index, sentence);
        EXPECT_EQ(doc.tokens[start + j].stem, c.tokens[j].stem);
      }
    }
  }
}

TEST(Candidates, EmptyDocument) {
  EXPECT_TRUE(GenerateCandidates(Text().Process(""), DefaultConfig()).empty());
}

TEST(ExtractorConfig, Validation) {
  auto cfg = DefaultConfig();
  EXPECT_NO_THROW(cfg.Validate());
  cfg.max_n = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = DefaultConfig();
  cfg.damping = 1.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = DefaultConfig();
  cfg.window = 1;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  EXPECT_EQ(ParseExtractorKind("graph"), ExtractorKind::kGraph);
  EXPECT_THROW(ParseExtractorKind("yake"), ConfigError);
}

TEST(Statistical, DirectCounts) {
  Document doc = Text().Process("alpha beta alpha");
  auto f = ComputeWordFeatures(doc, DefaultConfig());
  EXPECT_EQ(f.at("alpha").tf, 2);
  EXPECT_DOUBLE_EQ(f.at("alpha").t_sent, 1.0);
  EXPECT_DOUBLE_EQ(f.at("beta").t_case, 0.0);
}

TEST(Statistical, CasingFeatures) {
  Document doc = Text().Process("We like NLP and Paris. Paris is big.");
  auto f = ComputeWordFeatures(doc, DefaultConfig());
  EXPECT_DOUBLE_EQ(f.at("nlp").t_case, 1.0);
  // Once capitalized mid-sentence; the sentence-initial use does not count.
  EXPECT_DOUBLE_EQ(f.at("paris").t_case, 1.0 / (1.0 + std::log(2.0)));
}

TEST(Statistical, NoSentencesIsDegenerate) {
  std::vector<CandidateKeyword> none;
  EXPECT_THROW(ScoreStatistical(Text().Process(""), none, DefaultConfig()),
               DegenerateDocumentError);
}

// Scores cross-checked against an independent transcription of the
// formulas (tests/oracles/statistical_fixture.py).
TEST(Statistical, MatchesReferenceScores) {
  Document doc = Text().Process(
      "Graph ranking helps Keyword Extraction. The graph model uses keyword "
      "statistics and graph ranking. NLP systems sort keyword lists.");
  ASSERT_EQ(doc.sentence_count(), 3);
  auto cfg = DefaultConfig();
  auto features = ComputeWordFeatures(doc, cfg);
  auto cands = GenerateCandidates(doc, cfg);
  ScoreStatistical(doc, cands, cfg);
  std::map<std::string, double> phrase_scores;
  for (const auto& c : cands) phrase_scores[ToLower(c.phrase)] = c.score;

  std::string content = ReadTextFile(FixtureDir() / "statistical_scores.tsv");
  size_t words = 0;
  size_t phrases = 0;
  for (std::string_view line : SplitLines(content)) {
    auto cols = SplitOn(line, '\t');
    ASSERT_EQ(cols.size(), 3u);
    std::string key(cols[1]);
    double expected = std::stod(std::string(cols[2]));
    if (cols[0] == "word") {
      ++words;
      ASSERT_TRUE(features.count(key)) << key;
      EXPECT_NEAR(features.at(key).score, expected, 1e-12 * expected) << key;
    } else {
      ++phrases;
      ASSERT_TRUE(phrase_scores.count(key)) << key;
      EXPECT_NEAR(phrase_scores.at(key), expected, 1e-12 * expected) << key;
    }
  }
  EXPECT_EQ(words, features.size());
  EXPECT_EQ(phrases, cands.size());
}

TEST(Statistical, ScoresArePositive) {
  Document doc = Text().Process(ReadTextFile(
      FixtureDir() / "mini" / "docsutf8" / "doc2.txt"));
  auto cfg = DefaultConfig();
  for (const auto& [word, f] : ComputeWordFeatures(doc, cfg)) {
    EXPECT_GT(f.score, 0.0) << word;
    EXPECT_TRUE(std::isfinite(f.score)) << word;
  }
  auto cands = GenerateCandidates(doc, cfg);
  ScoreStatistical(doc, cands, cfg);
  for (const auto& c : cands) {
    EXPECT_EQ(c.orientation, Orientation::kLowerIsBetter);
    EXPECT_GT(c.score, 0.0);
  }
}

// Dense power iteration written independently of the library.
std::vector<double> DensePageRank(const std::vector<std::vector<double>>& w,
                                  double d) {
  const size_t n = w.size();
  std::vector<double> r(n, 1.0 / n);
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<double> next(n, (1.0 - d) / n);
    for (size_t u = 0; u < n; ++u) {
      double out = 0.0;
      for (double x : w[u]) out += x;
      for (size_t v = 0; v < n; ++v) {
        next[v] += out > 0 ? d * r[u] * w[u][v] / out : d * r[u] / n;
      }
    }
    r = next;
  }
  return r;
}

TEST(PageRank, StarGraphMatchesBruteForce) {
  WeightedGraph g;
  g.node_count = 5;
  g.adjacency.resize(5);
  std::vector<std::vector<double>> dense(5, std::vector<double>(5, 0.0));
  for (size_t leaf = 1; leaf < 5; ++leaf) {
    g.AddEdge(0, leaf, 1.0);
    dense[0][leaf] = dense[leaf][0] = 1.0;
  }
  auto rank = PageRank(g, PageRankOptions{});
  auto oracle = DensePageRank(dense, 0.85);
  for (size_t i = 0; i < 5; ++i) EXPECT_NEAR(rank[i], oracle[i], 1e-5);
  for (size_t leaf = 1; leaf < 5; ++leaf) EXPECT_GT(rank[0], rank[leaf]);
}

TEST(PageRank, RandomWeightedGraphsMatchBruteForce) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + rng() % 8;
    WeightedGraph g;
    g.node_count = n;
    g.adjacency.resize(n);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (size_t u = 0; u < n; ++u) {
      for (size_t v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) continue;
        double w = 1 + rng() % 4;
        g.AddEdge(u, v, w);
        dense[u][v] += w;
        dense[v][u] += w;
      }
    }
    PageRankOptions options;
    options.max_iterations = 1000;
    options.tolerance = 1e-12;
    auto rank = PageRank(g, options);
    auto oracle = DensePageRank(dense, 0.85);
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(rank[i], oracle[i], 1e-9);
      EXPECT_GE(rank[i], 0.0);
      sum += rank[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(PageRank, SymmetricIsolatedNodesAreEqual) {
  WeightedGraph g;
  g.node_count = 2;
  g.adjacency.resize(2);
  auto rank = PageRank(g, PageRankOptions{});
  EXPECT_DOUBLE_EQ(rank[0], rank[1]);
  EXPECT_NEAR(rank[0] + rank[1], 1.0, 1e-12);
}

TEST(PageRank, EmptyGraphIsDegenerate) {
  EXPECT_THROW(PageRank(WeightedGraph{}, PageRankOptions{}),
               DegenerateDocumentError);
}

TEST(Graph, ScoresSumOfWordRanks) {
  Document doc = Text().Process(ReadTextFile(
      FixtureDir() / "mini" / "docsutf8" / "doc3.txt"));
  auto cfg = DefaultConfig();
  auto cands = GenerateCandidates(doc, cfg);
  ScoreGraph(doc, cands, cfg);
  std::map<std::string, double> unigram;
  double total = 0.0;
  for (const auto& c : cands) {
    EXPECT_EQ(c.orientation, Orientation::kHigherIsBetter);
    if (c.size() == 1) unigram[ToLower(c.phrase)] = c.score;
  }
  for (const auto& [w, s] : unigram) total += s;
  // Unigram candidates may collapse surface variants by stem, so the total
  // is at most the full PageRank mass.
  EXPECT_LE(total, 1.0 + 1e-6);
  for (const auto& c : cands) {
    if (c.size() < 2) continue;
    double sum = 0.0;
    for (const auto& t : c.tokens) {
      auto it = unigram.find(ToLower(t.surface()));
      if (it == unigram.end()) sum = NAN;
      else sum += it->second;
    }
    if (!std::isnan(sum)) {
      EXPECT_NEAR(c.score, sum, 1e-12) << c.phrase;
    }
  }
}

TEST(Graph, NoCandidateWordsIsDegenerate) {
  Document doc = Text().Process("The of and.");
  std::vector<CandidateKeyword> cands;
  EXPECT_THROW(ScoreGraph(doc, cands, DefaultConfig()),
               DegenerateDocumentError);
}

CandidateKeyword Cand(std::string phrase, double score, size_t first,
                      Orientation o = Orientation::kHigherIsBetter) {
  CandidateKeyword c;
  c.key = phrase;
  c.phrase = std::move(phrase);
  c.score = score;
  c.occurrences = {first};
  c.orientation = o;
  return c;
}

TEST(TopK, OrdersByScore) {
  std::vector<CandidateKeyword> cands{Cand("a", 0.1, 0), Cand("b", 0.3, 1),
                                      Cand("c", 0.2, 2)};
  EXPECT_EQ(TopKPhrases(cands, 10), (std::vector<std::string>{"b", "c", "a"}));
  for (auto& c : cands) c.orientation = Orientation::kLowerIsBetter;
  EXPECT_EQ(TopKPhrases(cands, 2), (std::vector<std::string>{"a", "c"}));
}

TEST(TopK, TiesBreakByFirstOccurrenceThenPhrase) {
  std::vector<CandidateKeyword> cands{Cand("late", 0.5, 9),
                                      Cand("early", 0.5, 2),
                                      Cand("beta", 0.5, 4),
                                      Cand("alpha", 0.5, 4)};
  EXPECT_EQ(TopKPhrases(cands, 10),
            (std::vector<std::string>{"early", "alpha", "beta", "late"}));
}

TEST(TopK, ZeroK) {
  std::vector<CandidateKeyword> cands{Cand("a", 1, 0)};
  EXPECT_TRUE(TopK(cands, 0).empty());
}

TEST(TopK, PermutationStable) {
  std::mt19937 rng(13);
  std::vector<CandidateKeyword> cands;
  for (int i = 0; i < 40; ++i) {
    cands.push_back(Cand("p" + std::to_string(i),
                         static_cast<double>(rng() % 5), rng() % 10));
  }
  auto expected = TopK(cands, 15);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(cands.begin(), cands.end(), rng);
    EXPECT_EQ(TopK(cands, 15), expected);
  }
}

}  // namespace
}  // namespace keyforge
