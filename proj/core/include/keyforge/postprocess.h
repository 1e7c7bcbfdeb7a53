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

// Post-processing steps: PoS pattern filter (P), thesaurus boost (T) and
// Wikipedia entity boost (W), plus the pipeline combining them.

#ifndef KEYFORGE_POSTPROCESS_H_
#define KEYFORGE_POSTPROCESS_H_

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/document.h"
#include "keyforge/extract.h"

namespace keyforge {

struct PatternGrammar {
  std::set<PosTag> noun_tags{PosTag::kNN, PosTag::kNNS, PosTag::kNNP,
                             PosTag::kNNPS, PosTag::kVBG};
  std::set<PosTag> adj_tags{PosTag::kJJ, PosTag::kJJR, PosTag::kJJS,
                            PosTag::kVBN};
  std::set<PosTag> connector_tags{PosTag::kIN, PosTag::kCC};
  bool allow_single_adj = true;

  // Throws ConfigError if the tag sets overlap or noun_tags is empty.
  void Validate() const;
};

// Reads `key=value` lines over the defaults. Keys: noun_tags, adj_tags,
// connector_tags (comma-separated tag names) and allow_single_adj
// (true/false). '#' starts a comment. Throws FormatError or ConfigError.
PatternGrammar LoadPatternGrammar(const std::filesystem::path& path);
PatternGrammar ParsePatternGrammar(std::string_view content);

// NP | NP (CONN+ NP)+ | single ADJ, where NP = ADJ* NOUN+.
bool MatchPattern(std::span<const PosTag> tags, const PatternGrammar& g);

// Keeps candidates with at least one occurrence whose tags match.
std::vector<CandidateKeyword> PosFilter(std::vector<CandidateKeyword> candidates,
                                        const PatternGrammar& g);

struct BoostConfig {
  double thesaurus_factor = 2.0;
  double wiki_factor = 2.0;

  // Throws ConfigError if a factor is below 1.
  void Validate() const;
};

// Sets each candidate's lemma to text.Canonicalize(phrase).
void AssignLemmaForms(std::vector<CandidateKeyword>& candidates,
                      const TextProcessor& text);

// weight *= factor for candidates whose lemma form is a thesaurus term.
void ThesaurusBoost(std::vector<CandidateKeyword>& candidates,
                    const Thesaurus& thesaurus, const BoostConfig& cfg);
// weight *= factor for candidates whose lemma form is a gazetteer title.
void WikiBoost(std::vector<CandidateKeyword>& candidates,
               const EntityGazetteer& gazetteer, const BoostConfig& cfg);

struct WeightedScore {
  double score = 0.0;
  double weight = 1.0;
  Orientation orientation = Orientation::kHigherIsBetter;
};
// score * weight when higher is better, score / weight otherwise.
double ApplyWeight(const WeightedScore& s);
// Effective score of each candidate, in input order.
std::vector<double> ApplyWeights(const std::vector<CandidateKeyword>& candidates);

struct StepSet {
  bool pos = false;
  bool thesaurus = false;
  bool wiki = false;

  // "B" for the empty set, else the letters in P, T, W order.
  std::string Name() const;
  // Accepts "B" or any arrangement of distinct P, T and W letters.
  static StepSet Parse(std::string_view name);
  // B, P, T, W, PT, PW, TW, PTW.
  static std::vector<StepSet> All();
  bool operator==(const StepSet&) const = default;
};

struct PipelineResources {
  const TextProcessor* text = nullptr;  // needed by T and W
  const Thesaurus* thesaurus = nullptr;
  const EntityGazetteer* gazetteer = nullptr;
  PatternGrammar grammar;
  BoostConfig boost;
  ExtractorConfig extractor;
};

// Throws MissingResourceError if a requested step has no resource.
void CheckResources(const StepSet& steps, const PipelineResources& resources);

// [P] -> [T] -> [W] -> top_k over already scored candidates. Lemma forms
// are assigned where missing when T or W is requested.
std::vector<RankedPhrase> ApplySteps(std::vector<CandidateKeyword> candidates,
                                     const StepSet& steps,
                                     const PipelineResources& resources,
                                     size_t k);

// generate -> score -> [P] -> [T] -> [W] -> top_k. Throws
// MissingResourceError if a requested step has no resource.
std::vector<RankedPhrase> RunPipeline(const Document& doc, ExtractorKind kind,
                                      const StepSet& steps,
                                      const PipelineResources& resources,
                                      size_t k);

}  // namespace keyforge

#endif  // KEYFORGE_POSTPROCESS_H_
