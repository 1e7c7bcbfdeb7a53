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
#include <regex>
#include <string>
#include <vector>

#include "keyforge/postprocess.h"
#include "oracles.h"
#include "test_support.h"

namespace keyforge {
namespace {

using testing::DefaultConfig;
using testing::FixtureDir;
using testing::Text;

std::vector<PosTag> Tags(std::string_view names) {
  std::vector<PosTag> out;
  for (std::string_view n : SplitOn(names, ' ')) out.push_back(*ParseTag(n));
  return out;
}

bool Match(std::string_view names, const PatternGrammar& g = {}) {
  return MatchPattern(Tags(names), g);
}

TEST(Grammar, TopCorpusPatternsAccepted) {
  for (const char* p : {"NN", "NN NN", "JJ NN", "NNS", "JJ", "JJ NNS",
                        "NN NNS", "JJ NN NN", "VBG", "NN NN NN"}) {
    EXPECT_TRUE(Match(p)) << p;
  }
}

TEST(Grammar, Examples) {
  EXPECT_TRUE(Match("NN IN NN"));
  EXPECT_TRUE(Match("NN CC IN NN"));
  EXPECT_TRUE(Match("JJ NN IN JJ NNS"));
  EXPECT_TRUE(Match("VBN NN"));
  EXPECT_FALSE(Match("IN"));
  EXPECT_FALSE(Match("DT NN"));
  EXPECT_FALSE(Match("VB"));
  EXPECT_FALSE(Match("JJ IN"));
  EXPECT_FALSE(Match("NN IN"));
  EXPECT_FALSE(Match("IN NN"));
  EXPECT_FALSE(Match("JJ JJ"));
  EXPECT_FALSE(Match("NN JJ"));
  EXPECT_FALSE(MatchPattern({}, PatternGrammar{}));
}

TEST(Grammar, SingleAdjectiveSwitch) {
  PatternGrammar g;
  g.allow_single_adj = false;
  EXPECT_FALSE(Match("JJ", g));
  EXPECT_TRUE(Match("JJ NN", g));
}

// Exhaustive check against a regular-expression oracle over tag classes.
TEST(Grammar, AgreesWithRegexOracle) {
  const std::vector<PosTag> alphabet = Tags("NN JJ IN DT VBG VB CC");
  PatternGrammar g;
  auto cls = [&](PosTag t) {
    if (g.noun_tags.count(t)) return 'N';
    if (g.adj_tags.count(t)) return 'A';
    if (g.connector_tags.count(t)) return 'C';
    return 'X';
  };
  const std::regex np("(A*N+)(C+A*N+)*|A");
  for (int len = 1; len <= 5; ++len) {
    std::vector<size_t> idx(len, 0);
    while (true) {
      std::vector<PosTag> tags;
      std::string s;
      for (size_t i : idx) {
        tags.push_back(alphabet[i]);
        s += cls(alphabet[i]);
      }
      EXPECT_EQ(MatchPattern(tags, g), std::regex_match(s, np))
          << TagSequenceName(tags);
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == alphabet.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

TEST(Grammar, Validation) {
  PatternGrammar g;
  EXPECT_NO_THROW(g.Validate());
  g.adj_tags.insert(PosTag::kNN);
  EXPECT_THROW(g.Validate(), ConfigError);
  PatternGrammar empty;
  empty.noun_tags.clear();
  EXPECT_THROW(empty.Validate(), ConfigError);
}

TEST(Grammar, ParseOverrideFile) {
  PatternGrammar g = ParsePatternGrammar(
      "# health-domain variant\nnoun_tags = NN,NNS,NNP,NNPS\n"
      "allow_single_adj=false\n");
  EXPECT_FALSE(g.noun_tags.count(PosTag::kVBG));
  EXPECT_FALSE(g.allow_single_adj);
  EXPECT_EQ(g.adj_tags, PatternGrammar{}.adj_tags);
  EXPECT_THROW(ParsePatternGrammar("noun_tags=NN,QQ\n"), FormatError);
  EXPECT_THROW(ParsePatternGrammar("colour=blue\n"), FormatError);
  EXPECT_THROW(ParsePatternGrammar("no equals sign\n"), FormatError);
  EXPECT_THROW(ParsePatternGrammar("adj_tags=NN\n"), ConfigError);
}

CandidateKeyword TaggedCand(std::string phrase,
                            std::vector<std::vector<PosTag>> sequences,
                            double score = 1.0) {
  CandidateKeyword c;
  c.phrase = phrase;
  c.key = phrase;
  c.score = score;
  c.occurrences = {0};
  c.tag_sequences = std::move(sequences);
  return c;
}

TEST(PosFilter, KeepsMatchingCandidates) {
  std::vector<CandidateKeyword> cands{
      TaggedCand("deep learning", {Tags("JJ NN")}),
      TaggedCand("runs quickly", {Tags("VBZ RB")})};
  auto kept = PosFilter(cands, PatternGrammar{});
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].phrase, "deep learning");
  EXPECT_TRUE(PosFilter({}, PatternGrammar{}).empty());
}

TEST(PosFilter, AnyOccurrenceRule) {
  std::vector<CandidateKeyword> cands{
      TaggedCand("run", {Tags("NN"), Tags("VB")})};
  EXPECT_EQ(PosFilter(cands, PatternGrammar{}).size(), 1u);
}

TEST(PosFilter, OutputIsAnUnchangedSubset) {
  Document doc = Text().Process(ReadTextFile(
      FixtureDir() / "mini" / "docsutf8" / "doc1.txt"));
  auto cands = GenerateCandidates(doc, DefaultConfig());
  ScoreStatistical(doc, cands, DefaultConfig());
  auto kept = PosFilter(cands, PatternGrammar{});
  EXPECT_LT(kept.size(), cands.size());
  size_t j = 0;
  for (const auto& c : kept) {
    while (j < cands.size() && cands[j].key != c.key) ++j;
    ASSERT_LT(j, cands.size());
    EXPECT_EQ(cands[j].score, c.score);
    EXPECT_EQ(cands[j].phrase, c.phrase);
  }
}

CandidateKeyword LemmaCand(std::string phrase, double score,
                           Orientation o = Orientation::kHigherIsBetter) {
  CandidateKeyword c;
  c.phrase = std::move(phrase);
  c.key = c.phrase;
  c.score = score;
  c.occurrences = {0};
  c.orientation = o;
  return c;
}

TEST(Boost, ThesaurusUsesLemmaForms) {
  std::vector<CandidateKeyword> cands{LemmaCand("neural networks", 1.0),
                                      LemmaCand("deep models", 1.0)};
  AssignLemmaForms(cands, Text());
  EXPECT_EQ(cands[0].lemma, "neural network");
  std::vector<std::string> terms{"neural network"};
  Thesaurus t = MakeThesaurus("cs", terms, Text());
  ThesaurusBoost(cands, t, BoostConfig{});
  EXPECT_DOUBLE_EQ(cands[0].weight, 2.0);
  EXPECT_DOUBLE_EQ(cands[1].weight, 1.0);
}

TEST(Boost, FactorOneIsANoOp) {
  std::vector<CandidateKeyword> cands{LemmaCand("neural networks", 1.0)};
  AssignLemmaForms(cands, Text());
  std::vector<std::string> terms{"neural network"};
  BoostConfig cfg;
  cfg.thesaurus_factor = 1.0;
  ThesaurusBoost(cands, MakeThesaurus("cs", terms, Text()), cfg);
  EXPECT_DOUBLE_EQ(cands[0].weight, 1.0);
}

TEST(Boost, WikiAndComposition) {
  std::vector<CandidateKeyword> cands{LemmaCand("machine learning", 1.0),
                                      LemmaCand("father", 1.0),
                                      LemmaCand("neural networks", 1.0)};
  AssignLemmaForms(cands, Text());
  std::vector<std::string> words{"father"};
  DictionarySet dict = MakeDictionary(words);
  GazetteerOptions options;
  options.common_words = &dict;
  std::vector<std::string> titles{"Machine_learning", "Father",
                                  "Neural_network"};
  EntityGazetteer g = MakeGazetteer(titles, Text(), options);
  std::vector<std::string> terms{"Neural Networks"};
  ThesaurusBoost(cands, MakeThesaurus("cs", terms, Text()), BoostConfig{});
  WikiBoost(cands, g, BoostConfig{});
  EXPECT_DOUBLE_EQ(cands[0].weight, 2.0);
  EXPECT_DOUBLE_EQ(cands[1].weight, 1.0);
  EXPECT_DOUBLE_EQ(cands[2].weight, 4.0);
}

TEST(Boost, ConfigValidation) {
  BoostConfig cfg;
  cfg.wiki_factor = 0.5;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

TEST(ApplyWeights, Orientation) {
  EXPECT_DOUBLE_EQ(ApplyWeight({0.5, 2.0, Orientation::kLowerIsBetter}), 0.25);
  EXPECT_DOUBLE_EQ(ApplyWeight({0.5, 2.0, Orientation::kHigherIsBetter}), 1.0);
  EXPECT_DOUBLE_EQ(ApplyWeight({0.5, 1.0, Orientation::kLowerIsBetter}), 0.5);
  std::vector<CandidateKeyword> cands{
      LemmaCand("a", 0.5, Orientation::kLowerIsBetter)};
  cands[0].weight = 2.0;
  EXPECT_EQ(ApplyWeights(cands), (std::vector<double>{0.25}));
}

// 10,000 randomized candidate sets in both orientations.
TEST(Boost, PropertyNeverDemotesBoostedCandidates) {
  std::mt19937_64 rng(20261016);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string problem = oracle::BoostTrial(rng);
    if (!problem.empty()) {
      ADD_FAILURE() << "trial " << trial << ": " << problem;
      if (++failures > 10) break;
    }
  }
}

TEST(StepSet, NamesAndParsing) {
  auto all = StepSet::All();
  std::vector<std::string> names;
  for (const auto& s : all) names.push_back(s.Name());
  EXPECT_EQ(names, (std::vector<std::string>{"B", "P", "T", "W", "PT", "PW",
                                             "TW", "PTW"}));
  EXPECT_EQ(StepSet::Parse("WTP"), (StepSet{true, true, true}));
  EXPECT_EQ(StepSet::Parse("B"), StepSet{});
  EXPECT_THROW(StepSet::Parse("PP"), ConfigError);
  EXPECT_THROW(StepSet::Parse("X"), ConfigError);
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    resources_.text = &Text();
    resources_.extractor = DefaultConfig();
    std::vector<std::string> terms{"Keyword Extraction", "Neural Networks",
                                   "Graph Ranking"};
    thesaurus_ = MakeThesaurus("cs", terms, Text());
    std::vector<std::string> titles{"PageRank", "Neural_network",
                                    "Keyword_extraction", "Document"};
    gazetteer_ = MakeGazetteer(titles, Text(), GazetteerOptions{});
    resources_.thesaurus = &thesaurus_;
    resources_.gazetteer = &gazetteer_;
    doc_ = Text().Process(ReadTextFile(
        FixtureDir() / "mini" / "docsutf8" / "doc1.txt"));
  }

  PipelineResources resources_;
  Thesaurus thesaurus_;
  EntityGazetteer gazetteer_;
  Document doc_;
};

TEST_F(PipelineTest, BaselineEqualsBareExtractor) {
  for (ExtractorKind kind : {ExtractorKind::kStatistical, ExtractorKind::kGraph}) {
    auto cands = GenerateCandidates(doc_, resources_.extractor);
    Score(kind, doc_, cands, resources_.extractor);
    EXPECT_EQ(RunPipeline(doc_, kind, StepSet{}, resources_, 10),
              TopK(cands, 10));
  }
}

// {P,T,W} equals composing the three operations by hand.
TEST_F(PipelineTest, FullCombinationEqualsManualComposition) {
  for (ExtractorKind kind : {ExtractorKind::kStatistical, ExtractorKind::kGraph}) {
    auto cands = GenerateCandidates(doc_, resources_.extractor);
    Score(kind, doc_, cands, resources_.extractor);
    auto manual = PosFilter(cands, resources_.grammar);
    AssignLemmaForms(manual, Text());
    ThesaurusBoost(manual, thesaurus_, resources_.boost);
    WikiBoost(manual, gazetteer_, resources_.boost);
    auto expected = TopK(manual, 10);
    EXPECT_EQ(RunPipeline(doc_, kind, StepSet{true, true, true}, resources_, 10),
              expected);
    EXPECT_NE(expected, TopK(cands, 10));
  }
}

TEST_F(PipelineTest, EmptyThesaurusMatchesBaseline) {
  resources_.thesaurus = &Thesaurus::Empty();
  EXPECT_EQ(RunPipeline(doc_, ExtractorKind::kStatistical,
                        StepSet::Parse("T"), resources_, 10),
            RunPipeline(doc_, ExtractorKind::kStatistical, StepSet{},
                        resources_, 10));
}

TEST_F(PipelineTest, MissingResources) {
  resources_.thesaurus = nullptr;
  EXPECT_THROW(RunPipeline(doc_, ExtractorKind::kGraph, StepSet::Parse("T"),
                           resources_, 10),
               MissingResourceError);
  resources_.gazetteer = nullptr;
  EXPECT_THROW(CheckResources(StepSet::Parse("W"), resources_),
               MissingResourceError);
  EXPECT_NO_THROW(CheckResources(StepSet::Parse("P"), resources_));
}

TEST_F(PipelineTest, EmptyDocumentGivesNoKeywords) {
  EXPECT_TRUE(RunPipeline(Text().Process(""), ExtractorKind::kGraph,
                          StepSet::Parse("PTW"), resources_, 10)
                  .empty());
}

}  // namespace
}  // namespace keyforge
