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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "keyforge/errors.h"
#include "keyforge/extract.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

struct WordStats {
  int tf = 0;
  int capitalized = 0;  // capitalized, not sentence-initial
  int acronym = 0;
  std::vector<int> sentence_of_occurrence;
  std::set<std::string> left_distinct;
  std::set<std::string> right_distinct;
  int left_total = 0;
  int right_total = 0;
  bool candidate_word = false;
};

bool IsAcronym(std::string_view s) {
  if (s.size() < 2) return false;
  bool letter = false;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') return false;
    if (IsAsciiUpper(c)) letter = true;
  }
  return letter;
}

double Median(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

std::unordered_map<std::string, WordFeatures> ComputeWordFeatures(
    const Document& doc, const ExtractorConfig& cfg) {
  if (doc.sentence_count() < 1) {
    throw DegenerateDocumentError("document has no sentences");
  }
  const auto window = static_cast<size_t>(cfg.statistical_window);
  std::unordered_map<std::string, WordStats> stats;
  for (int s = 0; s < doc.sentence_count(); ++s) {
    std::vector<std::string> words;
    bool first = true;
    for (const TaggedToken& t : doc.Sentence(s)) {
      if (IsPunctuationToken(t.surface())) continue;
      std::string key = ToLower(t.surface());
      WordStats& w = stats[key];
      ++w.tf;
      w.sentence_of_occurrence.push_back(s);
      if (IsAcronym(t.surface())) {
        ++w.acronym;
      } else if (!first && IsAsciiUpper(t.surface().front())) {
        ++w.capitalized;
      }
      first = false;
      words.push_back(std::move(key));
    }
    for (size_t i = 0; i < words.size(); ++i) {
      WordStats& w = stats[words[i]];
      for (size_t j = i >= window ? i - window : 0; j < i; ++j) {
        w.left_distinct.insert(words[j]);
        ++w.left_total;
      }
      for (size_t j = i + 1; j < words.size() && j <= i + window; ++j) {
        w.right_distinct.insert(words[j]);
        ++w.right_total;
      }
    }
  }

  int max_tf = 0;
  std::vector<double> valid_tfs;
  for (auto& [word, w] : stats) {
    max_tf = std::max(max_tf, w.tf);
    w.candidate_word = IsCandidateWord(word, *cfg.stopwords);
    if (w.candidate_word) valid_tfs.push_back(w.tf);
  }
  double mean = 1.0;
  double stddev = 0.0;
  if (!valid_tfs.empty()) {
    double sum = 0.0;
    for (double tf : valid_tfs) sum += tf;
    mean = sum / valid_tfs.size();
    double var = 0.0;
    for (double tf : valid_tfs) var += (tf - mean) * (tf - mean);
    stddev = std::sqrt(var / valid_tfs.size());
  }

  const double sentences = doc.sentence_count();
  std::unordered_map<std::string, WordFeatures> out;
  for (const auto& [word, w] : stats) {
    WordFeatures f;
    f.tf = w.tf;
    f.t_case = std::max(w.capitalized, w.acronym) / (1.0 + std::log(w.tf));
    f.t_pos = std::log(std::log(3.0 + Median(w.sentence_of_occurrence)));
    f.t_fnorm = w.tf / (mean + stddev);
    double dl = w.left_total ? static_cast<double>(w.left_distinct.size()) /
                                   w.left_total
                             : 0.0;
    double dr = w.right_total ? static_cast<double>(w.right_distinct.size()) /
                                    w.right_total
                              : 0.0;
    f.t_rel = 1.0 + (dl + dr) * w.tf / max_tf;
    std::set<int> distinct(w.sentence_of_occurrence.begin(),
                           w.sentence_of_occurrence.end());
    f.t_sent = distinct.size() / sentences;
    f.score = (f.t_rel * f.t_pos) /
              (f.t_case + f.t_fnorm / f.t_rel + f.t_sent / f.t_rel);
    out.emplace(word, f);
  }
  return out;
}

void ScoreStatistical(const Document& doc,
                      std::vector<CandidateKeyword>& candidates,
                      const ExtractorConfig& cfg) {
  auto features = ComputeWordFeatures(doc, cfg);
  for (CandidateKeyword& c : candidates) {
    double product = 1.0;
    double sum = 0.0;
    for (const TaggedToken& t : c.tokens) {
      double s = features.at(ToLower(t.surface())).score;
      product *= s;
      sum += s;
    }
    c.score = product / (static_cast<double>(c.occurrences.size()) * (1.0 + sum));
    c.orientation = Orientation::kLowerIsBetter;
  }
}

}  // namespace keyforge
