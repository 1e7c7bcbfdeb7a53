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

#ifndef KEYFORGE_TAGS_H_
#define KEYFORGE_TAGS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace keyforge {

// Penn Treebank tag set, including the punctuation tags.
enum class PosTag : uint8_t {
  kCC, kCD, kDT, kEX, kFW, kIN, kJJ, kJJR, kJJS, kLS, kMD,
  kNN, kNNS, kNNP, kNNPS, kPDT, kPOS, kPRP, kPRPS, kRB, kRBR, kRBS, kRP,
  kSYM, kTO, kUH, kVB, kVBD, kVBG, kVBN, kVBP, kVBZ, kWDT, kWP, kWPS, kWRB,
  kPeriod,      // .
  kComma,       // ,
  kColon,       // :
  kLeftParen,   // (
  kRightParen,  // )
  kOpenQuote,   // ``
  kCloseQuote,  // ''
  kHash,        // #
  kDollar,      // $
};

inline constexpr int kNumPosTags = static_cast<int>(PosTag::kDollar) + 1;

// Canonical Penn name, e.g. "NNS", "PRP$", "``".
std::string_view TagName(PosTag tag);

// Inverse of TagName. Also accepts "-LRB-"/"-RRB-".
std::optional<PosTag> ParseTag(std::string_view name);

// All tags in enum order.
std::span<const PosTag> AllTags();

// Space-joined tag names, e.g. "JJ NN".
std::string TagSequenceName(std::span<const PosTag> tags);

inline bool IsNounTag(PosTag t) {
  return t == PosTag::kNN || t == PosTag::kNNS || t == PosTag::kNNP ||
         t == PosTag::kNNPS;
}

inline bool IsPluralNounTag(PosTag t) {
  return t == PosTag::kNNS || t == PosTag::kNNPS;
}

}  // namespace keyforge

#endif  // KEYFORGE_TAGS_H_
