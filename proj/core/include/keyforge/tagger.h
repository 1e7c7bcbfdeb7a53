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

// Deterministic part-of-speech tagger: a word -> most-frequent-tag lexicon,
// ordered suffix rules for unknown words, and a previous-tag correction pass.

#ifndef KEYFORGE_TAGGER_H_
#define KEYFORGE_TAGGER_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "keyforge/tags.h"
#include "keyforge/text.h"

namespace keyforge {

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::unordered_map<std::string, PosTag> entries);

  // UTF-8, one `word<TAB>tag` per line. Throws FormatError naming the line
  // for a missing tab or a tag outside the Penn set.
  static Lexicon FromFile(const std::filesystem::path& path);

  std::optional<PosTag> Lookup(std::string_view word) const;

  // Lowercase entries carrying `tag`, e.g. all singular common nouns.
  std::unordered_set<std::string> WordsWithTag(PosTag tag) const;

  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PosTag> entries_;
};

// Rewrites `from` to `to` when the previous token carries `previous`.
// previous == nullopt means "first token of a sentence".
struct TagRule {
  PosTag from;
  PosTag to;
  std::optional<PosTag> previous;

  bool operator==(const TagRule&) const = default;
};

// `from<TAB>to<TAB>previous` lines; "<S>" names the sentence start and '#'
// starts a comment.
std::vector<TagRule> LoadTagRules(const std::filesystem::path& path);

class Tagger {
 public:
  Tagger() = default;
  Tagger(Lexicon lexicon, std::vector<TagRule> rules);

  // Exactly one tag per token. Sentence boundaries are taken from
  // Token::sentence_index.
  std::vector<PosTag> Tag(std::span<const Token> tokens) const;

  // Lexicon lookup (exact, then lowercased), falling back to the
  // unknown-word rules.
  PosTag InitialTag(std::string_view surface, bool sentence_initial) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const std::vector<TagRule>& rules() const { return rules_; }

 private:
  Lexicon lexicon_;
  std::vector<TagRule> rules_;
};

// Suffix and shape rules for words missing from the lexicon. Defaults to NN.
PosTag GuessUnknownTag(std::string_view surface, bool sentence_initial);

}  // namespace keyforge

#endif  // KEYFORGE_TAGGER_H_
