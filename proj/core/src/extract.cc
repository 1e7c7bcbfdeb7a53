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

#include "keyforge/extract.h"

#include <algorithm>
#include <cmath>
#include <span>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

// U+2000..U+206F (General Punctuation) is encoded as E2 80 xx / E2 81 xx.
bool HasWordCharacter(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      if (IsWordByte(s[i])) return true;
      continue;
    }
    if (c >= 0xC0) {
      bool general_punct = c == 0xE2 && i + 1 < s.size() &&
                           (static_cast<unsigned char>(s[i + 1]) == 0x80 ||
                            static_cast<unsigned char>(s[i + 1]) == 0x81);
      if (!general_punct) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view ExtractorName(ExtractorKind kind) {
  return kind == ExtractorKind::kStatistical ? "statistical" : "graph";
}

ExtractorKind ParseExtractorKind(std::string_view name) {
  if (name == "statistical") return ExtractorKind::kStatistical;
  if (name == "graph") return ExtractorKind::kGraph;
  throw ConfigError("unknown extractor '" + std::string(name) +
                    "' (expected statistical or graph)");
}

double CandidateKeyword::EffectiveScore() const {
  return orientation == Orientation::kHigherIsBetter ? score * weight
                                                     : score / weight;
}

void ExtractorConfig::Validate() const {
  if (max_n < 1) throw ConfigError("max_n must be >= 1");
  if (window < 2) throw ConfigError("window must be >= 2");
  if (!(damping > 0.0 && damping < 1.0)) {
    throw ConfigError("damping must be in (0, 1)");
  }
  if (statistical_window < 1) {
    throw ConfigError("statistical_window must be >= 1");
  }
  if (!stopwords) throw ConfigError("stopword list not set");
}

bool IsCandidateWord(std::string_view surface,
                     const DictionarySet& stopwords) {
  if (surface.empty() || IsPunctuationToken(surface) ||
      IsNumericToken(surface) || !HasWordCharacter(surface)) {
    return false;
  }
  return !stopwords.Contains(ToLower(surface));
}

std::vector<CandidateKeyword> GenerateCandidates(const Document& doc,
                                                 const ExtractorConfig& cfg) {
  cfg.Validate();
  std::vector<char> eligible(doc.tokens.size());
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    eligible[i] = IsCandidateWord(doc.tokens[i].surface(), *cfg.stopwords);
  }

  std::vector<CandidateKeyword> out;
  std::unordered_map<std::string, size_t> index;
  const auto max_n = static_cast<size_t>(cfg.max_n);
  for (const Span& sentence : doc.sentences) {
    for (size_t begin = sentence.begin; begin < sentence.end; ++begin) {
      for (size_t n = 1; n <= max_n && begin + n <= sentence.end; ++n) {
        if (!eligible[begin + n - 1]) break;
        std::span<const TaggedToken> tokens(doc.tokens.data() + begin, n);
        std::string key = NormalizePhrase(tokens, NormMode::kStem);
        std::vector<PosTag> tags;
        for (const TaggedToken& t : tokens) tags.push_back(t.tag);

        auto [it, inserted] = index.try_emplace(key, out.size());
        if (inserted) {
          CandidateKeyword c;
          c.key = std::move(key);
          for (const TaggedToken& t : tokens) {
            if (!c.phrase.empty()) c.phrase += ' ';
            c.phrase += t.surface();
          }
          c.tokens.assign(tokens.begin(), tokens.end());
          out.push_back(std::move(c));
        }
        CandidateKeyword& c = out[it->second];
        c.occurrences.push_back(begin);
        if (std::find(c.tag_sequences.begin(), c.tag_sequences.end(), tags) ==
            c.tag_sequences.end()) {
          c.tag_sequences.push_back(std::move(tags));
        }
      }
    }
  }
  return out;
}

void Score(ExtractorKind kind, const Document& doc,
           std::vector<CandidateKeyword>& candidates,
           const ExtractorConfig& cfg) {
  if (kind == ExtractorKind::kStatistical) {
    ScoreStatistical(doc, candidates, cfg);
  } else {
    ScoreGraph(doc, candidates, cfg);
  }
}

namespace {

// Products of up to kExactFactors doubles are exact in this type.
using ExactFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<
        1024, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
constexpr size_t kExactFactors = 1024 / 53;

std::span<const double> Factors(const CandidateKeyword& c) {
  if (!c.boosts.empty()) return c.boosts;
  return std::span<const double>(&c.weight, 1);
}

ExactFloat ExactProduct(double score, std::span<const double> factors) {
  ExactFloat p = score;
  for (double f : factors) p *= f;
  return p;
}

}  // namespace

int CompareEffective(const CandidateKeyword& a, const CandidateKeyword& b) {
  const bool higher = a.orientation == Orientation::kHigherIsBetter;
  const double ea = a.EffectiveScore();
  const double eb = b.EffectiveScore();
  // Rounding moves a product of n factors by about n ulps, so values this
  // far apart are already ordered correctly.
  if (std::abs(ea - eb) > 1e-9 * std::max(std::abs(ea), std::abs(eb))) {
    return (ea > eb) == higher ? 1 : -1;
  }
  std::span<const double> fa = Factors(a);
  std::span<const double> fb = Factors(b);
  if (fa.size() + fb.size() + 1 > kExactFactors) {
    if (ea == eb) return 0;
    return (ea > eb) == higher ? 1 : -1;
  }
  // score_a * Fa vs score_b * Fb, or score_a / Fa vs score_b / Fb, which
  // for positive factors is score_a * Fb vs score_b * Fa.
  ExactFloat lhs = higher ? ExactProduct(a.score, fa) : ExactProduct(a.score, fb);
  ExactFloat rhs = higher ? ExactProduct(b.score, fb) : ExactProduct(b.score, fa);
  if (lhs == rhs) return 0;
  return (lhs > rhs) == higher ? 1 : -1;
}

std::vector<RankedPhrase> TopK(const std::vector<CandidateKeyword>& candidates,
                               size_t k) {
  std::vector<const CandidateKeyword*> order;
  order.reserve(candidates.size());
  for (const CandidateKeyword& c : candidates) order.push_back(&c);
  auto better = [](const CandidateKeyword* a, const CandidateKeyword* b) {
    if (int c = CompareEffective(*a, *b); c != 0) return c > 0;
    if (a->first_occurrence() != b->first_occurrence()) {
      return a->first_occurrence() < b->first_occurrence();
    }
    return a->phrase < b->phrase;
  };
  size_t n = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + n, order.end(), better);
  std::vector<RankedPhrase> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back({order[i]->phrase, order[i]->EffectiveScore()});
  }
  return out;
}

std::vector<std::string> TopKPhrases(
    const std::vector<CandidateKeyword>& candidates, size_t k) {
  std::vector<std::string> out;
  for (RankedPhrase& r : TopK(candidates, k)) out.push_back(std::move(r.phrase));
  return out;
}

}  // namespace keyforge
