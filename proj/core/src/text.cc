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

#include "keyforge/text.h"

#include <utility>

#include "keyforge/io.h"

namespace keyforge {
namespace {

bool IsAsciiPunct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7F && !IsWordByte(c);
}

// Punctuation that is split off the edges of a word. '+', '#', '&', '@' and
// '_' stay attached ("C++", "C#", "AT&T").
bool IsPeelable(char c) {
  return IsAsciiPunct(c) && c != '+' && c != '#' && c != '&' && c != '@' &&
         c != '_';
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || IsAsciiUpper(c);
}

// "e.g.", "U.S.", "Ph.D.": short letter groups each closed by a dot.
bool IsDottedAbbreviation(std::string_view core) {
  if (core.size() < 3 || core.back() != '.') return false;
  int groups = 0;
  size_t start = 0;
  while (start < core.size()) {
    size_t dot = core.find('.', start);
    if (dot == std::string_view::npos) return false;
    size_t len = dot - start;
    if (len == 0 || len > 3) return false;
    for (size_t i = start; i < dot; ++i) {
      if (!IsAsciiAlpha(core[i])) return false;
    }
    ++groups;
    start = dot + 1;
  }
  return groups >= 2;
}

void EmitChunk(std::string_view chunk, size_t offset, int sentence_index,
               std::vector<Token>& out) {
  size_t lead = 0;
  while (lead < chunk.size() && IsPeelable(chunk[lead])) {
    out.push_back({std::string(1, chunk[lead]), offset + lead, sentence_index});
    ++lead;
  }
  if (lead == chunk.size()) return;

  size_t core_end = chunk.size();
  while (core_end > lead && IsPeelable(chunk[core_end - 1])) --core_end;
  if (core_end < chunk.size() && chunk[core_end] == '.' &&
      IsDottedAbbreviation(chunk.substr(lead, core_end + 1 - lead))) {
    ++core_end;
  }
  out.push_back({std::string(chunk.substr(lead, core_end - lead)),
                 offset + lead, sentence_index});
  for (size_t i = core_end; i < chunk.size(); ++i) {
    out.push_back({std::string(1, chunk[i]), offset + i, sentence_index});
  }
}

bool IsClosingByte(std::string_view text, size_t i, size_t* width) {
  char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}' || c == '.' ||
      c == '!' || c == '?') {
    *width = 1;
    return true;
  }
  // U+2019 and U+201D closing quotes.
  if (i + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(text[i + 2]) == 0x99 ||
       static_cast<unsigned char>(text[i + 2]) == 0x9D)) {
    *width = 3;
    return true;
  }
  return false;
}

void PushTrimmed(std::string_view text, size_t begin, size_t end,
                 std::vector<Span>& out) {
  while (begin < end && IsAsciiSpace(text[begin])) ++begin;
  while (end > begin && IsAsciiSpace(text[end - 1])) --end;
  if (begin < end) out.push_back({begin, end});
}

}  // namespace

std::vector<Token> Tokenize(std::string_view sentence, size_t base_offset,
                            int sentence_index) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && IsAsciiSpace(sentence[i])) ++i;
    size_t start = i;
    while (i < sentence.size() && !IsAsciiSpace(sentence[i])) ++i;
    if (i > start) {
      EmitChunk(sentence.substr(start, i - start), base_offset + start,
                sentence_index, tokens);
    }
  }
  return tokens;
}

bool IsPunctuationToken(std::string_view surface) {
  if (surface.empty()) return false;
  for (char c : surface) {
    if (!IsAsciiPunct(c)) return false;
  }
  return true;
}

bool IsNumericToken(std::string_view surface) {
  bool digit = false;
  for (char c : surface) {
    if (IsAsciiDigit(c)) {
      digit = true;
    } else if (c != '.' && c != ',' && c != ':' && c != '/' && c != '-' &&
               c != '%' && c != '+') {
      return false;
    }
  }
  return digit;
}

SentenceSplitter::SentenceSplitter(
    std::unordered_set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

SentenceSplitter SentenceSplitter::FromFile(
    const std::filesystem::path& path) {
  std::string content = ReadTextFile(path);
  std::unordered_set<std::string> abbreviations;
  for (std::string_view line : SplitLines(content)) {
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    abbreviations.insert(ToLower(line));
  }
  return SentenceSplitter(std::move(abbreviations));
}

bool SentenceSplitter::IsAbbreviation(std::string_view word) const {
  while (!word.empty() && IsPeelable(word.front())) word.remove_prefix(1);
  if (word.size() == 2 && IsAsciiUpper(word[0]) && word[1] == '.') {
    return true;  // an initial, as in "J. Smith"
  }
  return abbreviations_.count(ToLower(word)) > 0;
}

std::vector<Span> SentenceSplitter::Split(std::string_view text) const {
  std::vector<Span> spans;
  const size_t n = text.size();
  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      size_t k = i + 1;
      while (k < n && IsAsciiSpace(text[k]) && text[k] != '\n') ++k;
      if (k < n && text[k] == '\n') {
        PushTrimmed(text, start, i, spans);
        while (k < n && IsAsciiSpace(text[k])) ++k;
        start = k;
        i = k;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    size_t width = 0;
    while (j < n && IsClosingByte(text, j, &width)) j += width;
    if (j >= n || !IsAsciiSpace(text[j])) {
      i = j;
      continue;
    }
    size_t k = j;
    while (k < n && IsAsciiSpace(text[k])) ++k;
    bool capital = k < n && (IsAsciiUpper(text[k]) ||
                             ((text[k] == '"' || text[k] == '(' ||
                               text[k] == '\'' || text[k] == '[') &&
                              k + 1 < n && IsAsciiUpper(text[k + 1])));
    if (!capital) {
      i = j;
      continue;
    }
    if (c == '.' && j == i + 1) {
      size_t w = i;
      while (w > start && !IsAsciiSpace(text[w - 1])) --w;
      if (IsAbbreviation(text.substr(w, i + 1 - w))) {
        i = j;
        continue;
      }
    }
    PushTrimmed(text, start, j, spans);
    start = k;
    i = k;
  }
  PushTrimmed(text, start, n, spans);
  return spans;
}

std::string NormalizePhrase(std::span<const TaggedToken> tokens,
                            NormMode mode) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToLower(mode == NormMode::kLemma ? tokens[i].lemma : tokens[i].stem);
  }
  return out;
}

}  // namespace keyforge
