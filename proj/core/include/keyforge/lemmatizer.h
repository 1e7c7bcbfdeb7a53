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

#ifndef KEYFORGE_LEMMATIZER_H_
#define KEYFORGE_LEMMATIZER_H_

#include <string>
#include <string_view>
#include <unordered_set>

#include "keyforge/tags.h"

namespace keyforge {

// Noun-plural lemmatizer. Plural noun tags (NNS, NNPS) go through an
// irregular-plural table and then suffix rules:
//   -men -> -man; -ies -> -y; -sses/-zzes/-xes/-ches/-shes -> strip "es";
//   other -ses/-zes and -s -> strip "s".
// Words ending in -ss, -us or -is are left alone. Every other tag maps to
// the lowercased surface.
//
// With a set of known singular nouns, a suffix rule whose result is not a
// known noun yields to the alternative strip that is ("cases" -> "case",
// not "cas"; "movies" -> "movie").
class Lemmatizer {
 public:
  Lemmatizer() = default;
  explicit Lemmatizer(std::unordered_set<std::string> known_nouns);

  std::string Lemmatize(std::string_view surface, PosTag tag) const;

  bool IsKnownNoun(std::string_view word) const;

 private:
  std::unordered_set<std::string> known_nouns_;
};

// Rule-only lemmatization (no known-noun lookups).
std::string Lemmatize(std::string_view surface, PosTag tag);

}  // namespace keyforge

#endif  // KEYFORGE_LEMMATIZER_H_
