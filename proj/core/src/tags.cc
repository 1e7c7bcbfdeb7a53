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

#include "keyforge/tags.h"

#include <array>

namespace keyforge {
namespace {

constexpr std::array<std::string_view, kNumPosTags> kNames = {
    "CC",  "CD",  "DT",  "EX",   "FW",  "IN",  "JJ",   "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS", "RP",  "SYM",  "TO",  "UH",  "VB",   "VBD", "VBG", "VBN",
    "VBP", "VBZ", "WDT", "WP",   "WP$", "WRB", ".",    ",",   ":",   "(",
    ")",   "``",  "''",  "#",    "$",
};

constexpr std::array<PosTag, kNumPosTags> MakeAllTags() {
  std::array<PosTag, kNumPosTags> tags{};
  for (int i = 0; i < kNumPosTags; ++i) tags[i] = static_cast<PosTag>(i);
  return tags;
}

constexpr std::array<PosTag, kNumPosTags> kAllTags = MakeAllTags();

}  // namespace

std::string_view TagName(PosTag tag) {
  return kNames[static_cast<size_t>(tag)];
}

std::optional<PosTag> ParseTag(std::string_view name) {
  if (name == "-LRB-") return PosTag::kLeftParen;
  if (name == "-RRB-") return PosTag::kRightParen;
  for (int i = 0; i < kNumPosTags; ++i) {
    if (kNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

std::span<const PosTag> AllTags() { return kAllTags; }

std::string TagSequenceName(std::span<const PosTag> tags) {
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += TagName(tags[i]);
  }
  return out;
}

}  // namespace keyforge
