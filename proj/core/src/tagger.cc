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

#include "keyforge/tagger.h"

#include <array>
#include <utility>

#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsAllUpper(std::string_view s) {
  int letters = 0;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') return false;
    if (IsAsciiUpper(c)) ++letters;
  }
  return letters >= 2;
}

PosTag ParseTagOrThrow(std::string_view name, const std::filesystem::path& path,
                       size_t line_no) {
  auto tag = ParseTag(name);
  if (!tag) {
    throw FormatError(path.string() + ":" + std::to_string(line_no) +
                      ": unknown tag '" + std::string(name) + "'");
  }
  return *tag;
}

}  // namespace

Lexicon::Lexicon(std::unordered_map<std::string, PosTag> entries)
    : entries_(std::move(entries)) {}

Lexicon Lexicon::FromFile(const std::filesystem::path& path) {
  std::string content = ReadTextFile(path);
  std::unordered_map<std::string, PosTag> entries;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected word<TAB>tag");
    }
    entries[std::string(line.substr(0, tab))] =
        ParseTagOrThrow(Trim(line.substr(tab + 1)), path, line_no);
  }
  return Lexicon(std::move(entries));
}

std::optional<PosTag> Lexicon::Lookup(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::unordered_set<std::string> Lexicon::WordsWithTag(PosTag tag) const {
  std::unordered_set<std::string> words;
  for (const auto& [word, t] : entries_) {
    if (t == tag && ToLower(word) == word) words.insert(word);
  }
  return words;
}

std::vector<TagRule> LoadTagRules(const std::filesystem::path& path) {
  std::string content = ReadTextFile(path);
  std::vector<TagRule> rules;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = SplitOn(line, '\t');
    if (fields.size() != 3) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected from<TAB>to<TAB>previous");
    }
    TagRule rule{ParseTagOrThrow(fields[0], path, line_no),
                 ParseTagOrThrow(fields[1], path, line_no), std::nullopt};
    if (fields[2] != "<S>") {
      rule.previous = ParseTagOrThrow(fields[2], path, line_no);
    }
    rules.push_back(rule);
  }
  return rules;
}

PosTag GuessUnknownTag(std::string_view surface, bool sentence_initial) {
  if (IsNumericToken(surface)) return PosTag::kCD;
  if (IsPunctuationToken(surface)) return PosTag::kSYM;
  if (IsAllUpper(surface)) return PosTag::kNNP;
  if (!sentence_initial && IsAsciiUpper(surface.front())) return PosTag::kNNP;
  if (surface.find('-') != std::string_view::npos) return PosTag::kJJ;

  std::string w = ToLower(surface);
  if (EndsWith(w, "ing")) return PosTag::kVBG;
  if (EndsWith(w, "ed")) return PosTag::kVBN;
  if (EndsWith(w, "ly")) return PosTag::kRB;
  static constexpr std::array<std::string_view, 10> kAdjectiveSuffixes = {
      "ous", "ful", "ive", "able", "ible", "al", "ic", "less", "ish", "ary"};
  for (std::string_view suffix : kAdjectiveSuffixes) {
    if (EndsWith(w, suffix)) return PosTag::kJJ;
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    return PosTag::kNNS;
  }
  return PosTag::kNN;
}

Tagger::Tagger(Lexicon lexicon, std::vector<TagRule> rules)
    : lexicon_(std::move(lexicon)), rules_(std::move(rules)) {}

PosTag Tagger::InitialTag(std::string_view surface,
                          bool sentence_initial) const {
  if (auto tag = lexicon_.Lookup(surface)) return *tag;
  std::string lower = ToLower(surface);
  if (lower != surface) {
    // Title-cased text: "Neural Networks" takes the tags of the lowercase
    // entries.
    if (auto tag = lexicon_.Lookup(lower)) return *tag;
  }
  return GuessUnknownTag(surface, sentence_initial);
}

std::vector<PosTag> Tagger::Tag(std::span<const Token> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    bool initial =
        i == 0 || tokens[i].sentence_index != tokens[i - 1].sentence_index;
    tags.push_back(InitialTag(tokens[i].surface, initial));
  }
  for (const TagRule& rule : rules_) {
    for (size_t i = 0; i < tags.size(); ++i) {
      if (tags[i] != rule.from) continue;
      bool initial =
          i == 0 || tokens[i].sentence_index != tokens[i - 1].sentence_index;
      bool match = rule.previous.has_value()
                       ? (!initial && tags[i - 1] == *rule.previous)
                       : initial;
      if (match) tags[i] = rule.to;
    }
  }
  return tags;
}

}  // namespace keyforge
