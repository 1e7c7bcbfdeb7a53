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

#include "keyforge/postprocess.h"

#include <algorithm>
#include <cctype>

#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

std::set<PosTag> ParseTagSet(std::string_view value, size_t line_no) {
  std::set<PosTag> tags;
  for (std::string_view item : SplitOn(value, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    auto tag = ParseTag(item);
    if (!tag) {
      throw FormatError("grammar line " + std::to_string(line_no) +
                        ": unknown tag '" + std::string(item) + "'");
    }
    tags.insert(*tag);
  }
  return tags;
}

bool Overlaps(const std::set<PosTag>& a, const std::set<PosTag>& b) {
  return std::any_of(a.begin(), a.end(),
                     [&b](PosTag t) { return b.count(t) > 0; });
}

void Boost(std::vector<CandidateKeyword>& candidates,
           const std::unordered_set<std::string>& terms, double factor) {
  if (factor == 1.0) return;
  for (CandidateKeyword& c : candidates) {
    if (terms.count(c.lemma)) {
      c.weight *= factor;
      c.boosts.push_back(factor);
    }
  }
}

}  // namespace

void PatternGrammar::Validate() const {
  if (noun_tags.empty()) throw ConfigError("noun_tags must not be empty");
  if (Overlaps(noun_tags, adj_tags) || Overlaps(noun_tags, connector_tags) ||
      Overlaps(adj_tags, connector_tags)) {
    throw ConfigError("grammar tag sets must be disjoint");
  }
}

PatternGrammar ParsePatternGrammar(std::string_view content) {
  PatternGrammar g;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("grammar line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key == "noun_tags") {
      g.noun_tags = ParseTagSet(value, line_no);
    } else if (key == "adj_tags") {
      g.adj_tags = ParseTagSet(value, line_no);
    } else if (key == "connector_tags") {
      g.connector_tags = ParseTagSet(value, line_no);
    } else if (key == "allow_single_adj") {
      if (value == "true") {
        g.allow_single_adj = true;
      } else if (value == "false") {
        g.allow_single_adj = false;
      } else {
        throw FormatError("grammar line " + std::to_string(line_no) +
                          ": allow_single_adj must be true or false");
      }
    } else {
      throw FormatError("grammar line " + std::to_string(line_no) +
                        ": unknown key '" + std::string(key) + "'");
    }
  }
  g.Validate();
  return g;
}

PatternGrammar LoadPatternGrammar(const std::filesystem::path& path) {
  return ParsePatternGrammar(ReadTextFile(path));
}

bool MatchPattern(std::span<const PosTag> tags, const PatternGrammar& g) {
  if (tags.empty()) return false;
  if (tags.size() == 1 && g.allow_single_adj && g.adj_tags.count(tags[0])) {
    return true;
  }
  // States: kStart (NP expected), kAdj (inside NP, noun still needed),
  // kNoun (NP complete, accepting), kConn (after a connector).
  enum class State { kStart, kAdj, kNoun, kConn };
  State state = State::kStart;
  for (PosTag tag : tags) {
    bool noun = g.noun_tags.count(tag) > 0;
    bool adj = g.adj_tags.count(tag) > 0;
    bool conn = g.connector_tags.count(tag) > 0;
    switch (state) {
      case State::kStart:
      case State::kConn:
      case State::kAdj:
        if (noun) {
          state = State::kNoun;
        } else if (adj) {
          state = State::kAdj;
        } else if (conn && state == State::kConn) {
          state = State::kConn;
        } else {
          return false;
        }
        break;
      case State::kNoun:
        if (noun) {
          state = State::kNoun;
        } else if (conn) {
          state = State::kConn;
        } else {
          return false;
        }
        break;
    }
  }
  return state == State::kNoun;
}

std::vector<CandidateKeyword> PosFilter(std::vector<CandidateKeyword> candidates,
                                        const PatternGrammar& g) {
  std::vector<CandidateKeyword> kept;
  for (CandidateKeyword& c : candidates) {
    bool match = std::any_of(
        c.tag_sequences.begin(), c.tag_sequences.end(),
        [&g](const std::vector<PosTag>& tags) { return MatchPattern(tags, g); });
    if (match) kept.push_back(std::move(c));
  }
  return kept;
}

void BoostConfig::Validate() const {
  if (!(thesaurus_factor >= 1.0) || !(wiki_factor >= 1.0)) {
    throw ConfigError("boost factors must be >= 1.0");
  }
}

void AssignLemmaForms(std::vector<CandidateKeyword>& candidates,
                      const TextProcessor& text) {
  for (CandidateKeyword& c : candidates) c.lemma = text.Canonicalize(c.phrase);
}

void ThesaurusBoost(std::vector<CandidateKeyword>& candidates,
                    const Thesaurus& thesaurus, const BoostConfig& cfg) {
  Boost(candidates, thesaurus.terms, cfg.thesaurus_factor);
}

void WikiBoost(std::vector<CandidateKeyword>& candidates,
               const EntityGazetteer& gazetteer, const BoostConfig& cfg) {
  Boost(candidates, gazetteer.titles, cfg.wiki_factor);
}

double ApplyWeight(const WeightedScore& s) {
  return s.orientation == Orientation::kHigherIsBetter ? s.score * s.weight
                                                       : s.score / s.weight;
}

std::vector<double> ApplyWeights(
    const std::vector<CandidateKeyword>& candidates) {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (const CandidateKeyword& c : candidates) {
    out.push_back(ApplyWeight({c.score, c.weight, c.orientation}));
  }
  return out;
}

std::string StepSet::Name() const {
  std::string name;
  if (pos) name += 'P';
  if (thesaurus) name += 'T';
  if (wiki) name += 'W';
  return name.empty() ? "B" : name;
}

StepSet StepSet::Parse(std::string_view name) {
  StepSet s;
  std::string upper(Trim(name));
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "B") return s;
  if (upper.empty()) throw ConfigError("empty step set (use B for baseline)");
  for (char c : upper) {
    bool* flag = c == 'P' ? &s.pos : c == 'T' ? &s.thesaurus
                                   : c == 'W' ? &s.wiki
                                              : nullptr;
    if (flag == nullptr || *flag) {
      throw ConfigError("invalid step set '" + std::string(name) +
                        "' (expected B or letters from P, T, W)");
    }
    *flag = true;
  }
  return s;
}

std::vector<StepSet> StepSet::All() {
  std::vector<StepSet> all;
  for (const char* name : {"B", "P", "T", "W", "PT", "PW", "TW", "PTW"}) {
    all.push_back(Parse(name));
  }
  return all;
}

void CheckResources(const StepSet& steps, const PipelineResources& resources) {
  if (steps.thesaurus && resources.thesaurus == nullptr) {
    throw MissingResourceError("step T requires a thesaurus");
  }
  if (steps.wiki && resources.gazetteer == nullptr) {
    throw MissingResourceError("step W requires a Wikipedia gazetteer");
  }
  if ((steps.thesaurus || steps.wiki) && resources.text == nullptr) {
    throw MissingResourceError("steps T and W require a text processor");
  }
}

std::vector<RankedPhrase> ApplySteps(std::vector<CandidateKeyword> candidates,
                                     const StepSet& steps,
                                     const PipelineResources& resources,
                                     size_t k) {
  CheckResources(steps, resources);
  if (steps.pos) candidates = PosFilter(std::move(candidates), resources.grammar);
  if (steps.thesaurus || steps.wiki) {
    for (CandidateKeyword& c : candidates) {
      if (c.lemma.empty()) c.lemma = resources.text->Canonicalize(c.phrase);
    }
  }
  if (steps.thesaurus) {
    ThesaurusBoost(candidates, *resources.thesaurus, resources.boost);
  }
  if (steps.wiki) WikiBoost(candidates, *resources.gazetteer, resources.boost);
  return TopK(candidates, k);
}

std::vector<RankedPhrase> RunPipeline(const Document& doc, ExtractorKind kind,
                                      const StepSet& steps,
                                      const PipelineResources& resources,
                                      size_t k) {
  CheckResources(steps, resources);
  std::vector<CandidateKeyword> candidates =
      GenerateCandidates(doc, resources.extractor);
  if (candidates.empty()) return {};
  Score(kind, doc, candidates, resources.extractor);
  return ApplySteps(std::move(candidates), steps, resources, k);
}

}  // namespace keyforge
