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

// Candidate generation and the two unsupervised extractors.

#ifndef KEYFORGE_EXTRACT_H_
#define KEYFORGE_EXTRACT_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/document.h"

namespace keyforge {

enum class Orientation { kLowerIsBetter, kHigherIsBetter };

enum class ExtractorKind { kStatistical, kGraph };

std::string_view ExtractorName(ExtractorKind kind);
// "statistical" or "graph". Throws ConfigError otherwise.
ExtractorKind ParseExtractorKind(std::string_view name);

struct CandidateKeyword {
  std::string key;     // stemmed form; candidates are unique by key
  std::string phrase;  // surface of the first occurrence, space-joined
  std::vector<TaggedToken> tokens;  // the first occurrence
  std::vector<size_t> occurrences;  // document token index of each start
  // Distinct tag sequences over all occurrences, in first-seen order.
  std::vector<std::vector<PosTag>> tag_sequences;
  // Lemma-normal form used for thesaurus and gazetteer lookups. Filled by
  // AssignLemmaForms; empty until then.
  std::string lemma;
  double score = 0.0;
  double weight = 1.0;
  // Factors multiplied into `weight`, in order. Ranking compares effective
  // scores exactly over these, so boosting is monotone despite rounding.
  // When empty, `weight` itself is the only factor.
  std::vector<double> boosts;
  Orientation orientation = Orientation::kHigherIsBetter;

  size_t first_occurrence() const { return occurrences.front(); }
  size_t size() const { return tokens.size(); }
  // score * weight or score / weight depending on orientation.
  double EffectiveScore() const;
};

struct ExtractorConfig {
  int max_n = 3;
  int window = 10;              // graph co-occurrence window
  double damping = 0.85;        // graph PageRank damping
  int statistical_window = 1;   // context window of the relatedness feature
  std::shared_ptr<const DictionarySet> stopwords;

  // Throws ConfigError when a field is out of range.
  void Validate() const;
};

// True if `surface` may appear inside a candidate: not a stopword, not
// punctuation (ASCII or General Punctuation block), not purely numeric.
bool IsCandidateWord(std::string_view surface, const DictionarySet& stopwords);

// Every contiguous within-sentence n-gram (1 <= n <= max_n) made only of
// candidate words, collapsed by stemmed form. Ordered by first occurrence,
// then length.
std::vector<CandidateKeyword> GenerateCandidates(const Document& doc,
                                                 const ExtractorConfig& cfg);

// Per-word features of the statistical extractor, exposed for testing.
struct WordFeatures {
  int tf = 0;
  double t_case = 0.0;
  double t_pos = 0.0;
  double t_fnorm = 0.0;
  double t_rel = 0.0;
  double t_sent = 0.0;
  double score = 0.0;
};

// Keyed by lowercase surface; covers every non-punctuation token.
std::unordered_map<std::string, WordFeatures> ComputeWordFeatures(
    const Document& doc, const ExtractorConfig& cfg);

// Sets score and orientation (lower is better). Throws
// DegenerateDocumentError for a document without sentences.
void ScoreStatistical(const Document& doc,
                      std::vector<CandidateKeyword>& candidates,
                      const ExtractorConfig& cfg);

struct WeightedGraph {
  size_t node_count = 0;
  // Symmetric adjacency: adjacency[u] holds (v, weight) pairs, u != v.
  std::vector<std::vector<std::pair<size_t, double>>> adjacency;

  void AddEdge(size_t u, size_t v, double weight);
};

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  int max_iterations = 100;
};

// Weighted PageRank. Mass of nodes without edges is spread uniformly, so
// the scores sum to 1. Throws DegenerateDocumentError on an empty graph.
std::vector<double> PageRank(const WeightedGraph& graph,
                             const PageRankOptions& options);

// Sets score (sum of word PageRank) and orientation (higher is better).
// Throws DegenerateDocumentError when no candidate words exist.
void ScoreGraph(const Document& doc, std::vector<CandidateKeyword>& candidates,
                const ExtractorConfig& cfg);

void Score(ExtractorKind kind, const Document& doc,
           std::vector<CandidateKeyword>& candidates,
           const ExtractorConfig& cfg);

struct RankedPhrase {
  std::string phrase;
  double effective_score = 0.0;

  bool operator==(const RankedPhrase&) const = default;
};

// Orders effective scores by exact value: negative, zero or positive as
// `a` ranks below, level with or above `b`. Same orientation required.
int CompareEffective(const CandidateKeyword& a, const CandidateKeyword& b);

// Best k by exact effective score; ties go to the earlier first occurrence,
// then the lexicographically smaller phrase. All candidates must share one
// orientation.
std::vector<RankedPhrase> TopK(const std::vector<CandidateKeyword>& candidates,
                               size_t k);
std::vector<std::string> TopKPhrases(
    const std::vector<CandidateKeyword>& candidates, size_t k);

}  // namespace keyforge

#endif  // KEYFORGE_EXTRACT_H_
