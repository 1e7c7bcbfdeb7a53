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
#include <random>
#include <string>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/resources.h"
#include "test_support.h"

namespace keyforge {
namespace {

using testing::DataDir;
using testing::FixtureDir;
using testing::TempDir;
using testing::Text;

TEST(LoadDataset, PairsByBasename) {
  TempDir dir;
  dir.Write("ds/docsutf8/b.txt", "Second doc.");
  dir.Write("ds/docsutf8/a.txt", "First doc.");
  dir.Write("ds/keys/a.key", "deep learning\n\ngraph\n");
  dir.Write("ds/keys/b.key", "  doc  \r\n");
  KeDataset ds = LoadDataset(dir.path() / "ds");
  EXPECT_EQ(ds.name, "ds");
  ASSERT_EQ(ds.documents.size(), 2u);
  EXPECT_EQ(ds.documents[0].id, "a");
  EXPECT_EQ(ds.documents[1].id, "b");
  EXPECT_EQ(ds.GoldFor("a"),
            (std::vector<std::string>{"deep learning", "graph"}));
  EXPECT_EQ(ds.GoldFor("b"), (std::vector<std::string>{"doc"}));
  EXPECT_EQ(ds.gold_count(), 3u);
}

TEST(LoadDataset, MissingKeyFile) {
  TempDir dir;
  dir.Write("ds/docsutf8/a.txt", "text");
  std::filesystem::create_directories(dir.path() / "ds/keys");
  EXPECT_THROW(LoadDataset(dir.path() / "ds"), MissingPairError);
}

TEST(LoadDataset, KeyWithoutDocument) {
  TempDir dir;
  dir.Write("ds/docsutf8/a.txt", "text");
  dir.Write("ds/keys/a.key", "x");
  dir.Write("ds/keys/z.key", "y");
  EXPECT_THROW(LoadDataset(dir.path() / "ds"), MissingPairError);
}

TEST(LoadDataset, InvalidUtf8) {
  TempDir dir;
  dir.Write("ds/docsutf8/a.txt", std::string("bad \xff byte"));
  dir.Write("ds/keys/a.key", "x");
  EXPECT_THROW(LoadDataset(dir.path() / "ds"), EncodingError);
}

TEST(LoadDataset, MissingDirectory) {
  EXPECT_THROW(LoadDataset("/nonexistent/keyforge/ds"), IoError);
}

TEST(LoadDataset, BundledMiniFixture) {
  KeDataset ds = LoadDataset(FixtureDir() / "mini");
  EXPECT_EQ(ds.name, "mini");
  EXPECT_EQ(ds.documents.size(), 3u);
  EXPECT_EQ(ds.gold_count(), 19u);
  for (const auto& doc : ds.documents) EXPECT_FALSE(ds.GoldFor(doc.id).empty());
}

TEST(LoadWordlist, LowercasedSet) {
  TempDir dir;
  auto p = dir.Write("w.txt", "Table\nschool\n\nTable\r\n");
  DictionarySet d = LoadWordlist(p);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.Contains("table"));
  EXPECT_TRUE(d.Contains("school"));
}

TEST(LoadWordlist, EmptyFileIsAnError) {
  TempDir dir;
  EXPECT_THROW(LoadWordlist(dir.Write("w.txt", "\n\n")), FormatError);
}

TEST(LoadThesaurus, NormalizesAndDeduplicates) {
  TempDir dir;
  auto p = dir.Write("cs.txt", "Neural Networks\nneural network\n");
  Thesaurus t = LoadThesaurus(p, Text());
  EXPECT_EQ(t.name, "cs");
  EXPECT_EQ(t.terms, (std::unordered_set<std::string>{"neural network"}));
}

TEST(LoadThesaurus, LemmaRule) {
  std::vector<std::string> lines{"Support Vector Machines"};
  Thesaurus t = MakeThesaurus("x", lines, Text());
  EXPECT_TRUE(t.Contains("support vector machine"));
}

TEST(LoadThesaurus, EmptyFileWarns) {
  TempDir dir;
  testing::WarningCapture warnings;
  Thesaurus t = LoadThesaurus(dir.Write("empty.txt", ""), Text());
  EXPECT_EQ(t.size(), 0u);
  EXPECT_EQ(warnings.messages.size(), 1u);
}

TEST(LoadThesaurus, TermsAreFixpoints) {
  Thesaurus t = LoadThesaurus(DataDir() / "thesauri" / "cs.txt", Text());
  ASSERT_GT(t.size(), 0u);
  for (const std::string& term : t.terms) {
    EXPECT_EQ(Text().Canonicalize(term), term);
  }
}

TEST(LoadThesaurus, OrderIndependent) {
  std::vector<std::string> lines{"Gene Expression", "Cancer Cells",
                                 "protein folding", "Microarrays"};
  Thesaurus a = MakeThesaurus("t", lines, Text());
  std::reverse(lines.begin(), lines.end());
  Thesaurus b = MakeThesaurus("t", lines, Text());
  EXPECT_EQ(a, b);
}

TEST(CleanWikiTitle, StripsOneTrailingParenthetical) {
  EXPECT_EQ(CleanWikiTitle("Python_(programming_language)"), "Python");
  EXPECT_EQ(CleanWikiTitle("Machine_learning"), "Machine learning");
  EXPECT_EQ(CleanWikiTitle("A_(b)_(c)"), "A (b)");
  EXPECT_EQ(CleanWikiTitle("(Inner)_thing"), "(Inner) thing");
}

TEST(Gazetteer, CleaningAndDictionaryFilter) {
  std::vector<std::string> words{"father", "school"};
  DictionarySet dict = MakeDictionary(words);
  std::vector<std::string> titles{"Python_(programming_language)", "Father",
                                  "Machine_learning", "School_bus",
                                  "Father_Brown"};
  GazetteerOptions options;
  options.common_words = &dict;
  EntityGazetteer g = MakeGazetteer(titles, Text(), options);
  EXPECT_TRUE(g.Contains("python"));
  EXPECT_FALSE(g.Contains("father"));
  EXPECT_TRUE(g.Contains("machine learning"));
  // Multi-word titles are never removed by the dictionary.
  EXPECT_TRUE(g.Contains("school bus"));
  EXPECT_TRUE(g.Contains("father brown"));
  EXPECT_EQ(g.removed_common_unigrams, 1u);
}

TEST(Gazetteer, TokenCap) {
  std::vector<std::string> titles{"One_two_three", "One_two_three_four"};
  EntityGazetteer capped = MakeGazetteer(titles, Text(), GazetteerOptions{});
  EXPECT_TRUE(capped.Contains("one two three"));
  EXPECT_FALSE(capped.Contains("one two three four"));
  GazetteerOptions unlimited;
  unlimited.max_tokens = 0;
  EntityGazetteer all = MakeGazetteer(titles, Text(), unlimited);
  EXPECT_TRUE(all.Contains("one two three four"));
}

// No stored unigram is in the dictionary; no stored title has a trailing
// parenthetical; every title is a lowercase fixpoint.
TEST(Gazetteer, InvariantsOnFixtureFile) {
  DictionarySet dict = LoadWordlist(FixtureDir() / "wordlist.txt");
  EntityGazetteer g =
      LoadWikiTitles(FixtureDir() / "wiki_titles.txt", dict, Text());
  ASSERT_GT(g.size(), 0u);
  for (const std::string& title : g.titles) {
    EXPECT_EQ(title, ToLower(title));
    EXPECT_NE(title.back(), ')');
    EXPECT_EQ(Text().Canonicalize(title), title);
    if (title.find(' ') == std::string::npos) {
      EXPECT_FALSE(dict.Contains(title)) << title;
    }
  }
  EXPECT_FALSE(g.Contains("father"));
  EXPECT_TRUE(g.Contains("keyword extraction"));
  EXPECT_TRUE(g.Contains("stock market"));
}

TEST(Gazetteer, OrderIndependent) {
  std::vector<std::string> titles{"Neural_network", "Cancer_cell",
                                  "Interest_rate", "Table_(database)"};
  EntityGazetteer a = MakeGazetteer(titles, Text(), GazetteerOptions{});
  std::mt19937 rng(3);
  std::shuffle(titles.begin(), titles.end(), rng);
  EntityGazetteer b = MakeGazetteer(titles, Text(), GazetteerOptions{});
  EXPECT_EQ(a.titles, b.titles);
}

TEST(Resources, ResolveDataDir) {
  EXPECT_EQ(ResolveDataDir(DataDir()), DataDir());
  EXPECT_TRUE(std::filesystem::exists(ResolveDataDir() / "lexicon.tsv"));
  EXPECT_GT(LoadStopwords(DataDir()).size(), 500u);
}

}  // namespace
}  // namespace keyforge
