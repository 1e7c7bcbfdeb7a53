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

// Sentence splitting, tokenization and the token types shared by every
// module.

#ifndef KEYFORGE_TEXT_H_
#define KEYFORGE_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "keyforge/tags.h"

namespace keyforge {

// Half-open byte range [begin, end) into a source string.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  std::string_view In(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  size_t char_offset = 0;  // bytes into the source text
  int sentence_index = 0;

  bool operator==(const Token&) const = default;
};

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kNN;
  std::string lemma;  // lowercase
  std::string stem;   // lowercase Porter stem of the surface

  const std::string& surface() const { return token.surface; }
  bool operator==(const TaggedToken&) const = default;
};

// Splits `sentence` on whitespace, then peels leading and trailing
// punctuation into tokens of their own. Hyphens, apostrophes and dots inside
// a word are kept ("state-of-the-art", "e.g.", "U.S."). Offsets are
// base_offset + position within `sentence`.
std::vector<Token> Tokenize(std::string_view sentence, size_t base_offset = 0,
                            int sentence_index = 0);

// True for a token made only of ASCII punctuation.
bool IsPunctuationToken(std::string_view surface);

// True for digits with optional separators (".,:/-%"), e.g. "2001", "1.5".
// Mixed tokens like "5G" are not numeric.
bool IsNumericToken(std::string_view surface);

// Rule-based splitter: a sentence ends at '.', '!' or '?' (plus any closing
// quotes or brackets) when followed by whitespace and an uppercase letter,
// unless the word carrying the '.' is a known abbreviation or a single-letter
// initial. A blank line always ends a sentence. Returned spans are trimmed of
// surrounding whitespace.
class SentenceSplitter {
 public:
  SentenceSplitter() = default;
  explicit SentenceSplitter(std::unordered_set<std::string> abbreviations);

  // One abbreviation per line, compared lowercased; '#' starts a comment.
  static SentenceSplitter FromFile(const std::filesystem::path& path);

  std::vector<Span> Split(std::string_view text) const;

  const std::unordered_set<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  bool IsAbbreviation(std::string_view word) const;

  std::unordered_set<std::string> abbreviations_;
};

enum class NormMode { kLemma, kStem };

// Per-token lemma or stem joined by single spaces.
std::string NormalizePhrase(std::span<const TaggedToken> tokens, NormMode mode);

}  // namespace keyforge

#endif  // KEYFORGE_TEXT_H_
