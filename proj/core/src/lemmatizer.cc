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

#include "keyforge/lemmatizer.h"

#include <string_view>
#include <unordered_map>
#include <utility>

#include "keyforge/io.h"

namespace keyforge {
namespace {

const std::unordered_map<std::string_view, std::string_view>& Irregulars() {
  static const auto* table =
      new std::unordered_map<std::string_view, std::string_view>{
          // identity plurals and mass nouns
          {"data", "data"}, {"metadata", "metadata"}, {"media", "media"},
          {"news", "news"}, {"series", "series"}, {"species", "species"},
          {"sheep", "sheep"}, {"deer", "deer"}, {"fish", "fish"},
          {"aircraft", "aircraft"}, {"people", "people"},
          {"physics", "physics"}, {"mathematics", "mathematics"},
          {"economics", "economics"}, {"ethics", "ethics"},
          {"politics", "politics"}, {"linguistics", "linguistics"},
          {"genetics", "genetics"}, {"genomics", "genomics"},
          {"proteomics", "proteomics"}, {"electronics", "electronics"},
          {"robotics", "robotics"}, {"analytics", "analytics"},
          {"semantics", "semantics"}, {"dynamics", "dynamics"},
          {"mechanics", "mechanics"}, {"logistics", "logistics"},
          {"graphics", "graphics"}, {"informatics", "informatics"},
          {"bioinformatics", "bioinformatics"}, {"pharmaceutics", "pharmaceutics"},
          {"econometrics", "econometrics"}, {"athletics", "athletics"},
          {"headquarters", "headquarters"}, {"means", "means"},
          {"crossroads", "crossroads"}, {"diabetes", "diabetes"},
          {"herpes", "herpes"}, {"rabies", "rabies"}, {"measles", "measles"},
          {"mumps", "mumps"}, {"thesis", "thesis"},
          // Latin and Greek plurals
          {"criteria", "criterion"}, {"phenomena", "phenomenon"},
          {"analyses", "analysis"}, {"hypotheses", "hypothesis"},
          {"theses", "thesis"}, {"crises", "crisis"},
          {"diagnoses", "diagnosis"}, {"prognoses", "prognosis"},
          {"syntheses", "synthesis"}, {"parentheses", "parenthesis"},
          {"emphases", "emphasis"}, {"bases", "base"}, {"axes", "axis"},
          {"indices", "index"}, {"matrices", "matrix"},
          {"vertices", "vertex"}, {"apices", "apex"},
          {"appendices", "appendix"}, {"corpora", "corpus"},
          {"genera", "genus"}, {"alumni", "alumnus"},
          {"stimuli", "stimulus"}, {"fungi", "fungus"}, {"nuclei", "nucleus"},
          {"radii", "radius"}, {"cacti", "cactus"}, {"foci", "focus"},
          {"loci", "locus"}, {"bacteria", "bacterium"},
          {"curricula", "curriculum"}, {"strata", "stratum"},
          {"spectra", "spectrum"}, {"quanta", "quantum"},
          {"maxima", "maximum"}, {"minima", "minimum"},
          {"optima", "optimum"}, {"memoranda", "memorandum"},
          {"formulae", "formula"}, {"antennae", "antenna"},
          {"larvae", "larva"}, {"vertebrae", "vertebra"}, {"algae", "alga"},
          {"thesauri", "thesaurus"}, {"viruses", "virus"},
          {"statuses", "status"}, {"campuses", "campus"},
          {"buses", "bus"}, {"gases", "gas"}, {"lenses", "lens"},
          // Germanic plurals
          {"children", "child"}, {"men", "man"}, {"women", "woman"},
          {"feet", "foot"}, {"teeth", "tooth"}, {"geese", "goose"},
          {"mice", "mouse"}, {"lice", "louse"}, {"oxen", "ox"},
          {"dice", "die"},
          // -f/-fe plurals
          {"lives", "life"}, {"wives", "wife"}, {"knives", "knife"},
          {"leaves", "leaf"}, {"halves", "half"}, {"shelves", "shelf"},
          {"wolves", "wolf"}, {"thieves", "thief"}, {"selves", "self"},
          {"calves", "calf"}, {"loaves", "loaf"}, {"scarves", "scarf"},
      };
  return *table;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string Chop(std::string_view s, size_t n) {
  return std::string(s.substr(0, s.size() - n));
}

std::string LemmatizePlural(std::string_view surface,
                            const Lemmatizer* known) {
  std::string w = ToLower(surface);
  const auto& irregular = Irregulars();
  if (auto it = irregular.find(w); it != irregular.end()) {
    return std::string(it->second);
  }
  if (w.size() > 4 && EndsWith(w, "men")) return Chop(w, 3) + "man";
  if (w.size() < 3 || EndsWith(w, "ss") || EndsWith(w, "us") ||
      EndsWith(w, "is") || w.back() != 's') {
    return w;
  }
  auto prefer = [&](std::string primary, std::string alternative) {
    if (known == nullptr || known->IsKnownNoun(primary) ||
        !known->IsKnownNoun(alternative)) {
      return primary;
    }
    return alternative;
  };
  if (EndsWith(w, "ies") && w.size() > 4) {
    return prefer(Chop(w, 3) + "y", Chop(w, 1));
  }
  if (EndsWith(w, "sses") || EndsWith(w, "zzes") || EndsWith(w, "xes") ||
      EndsWith(w, "ches") || EndsWith(w, "shes")) {
    return prefer(Chop(w, 2), Chop(w, 1));
  }
  // houses, phrases, sizes: the silent e belongs to the stem.
  if (EndsWith(w, "ses") || EndsWith(w, "zes")) {
    return prefer(Chop(w, 1), Chop(w, 2));
  }
  return Chop(w, 1);
}

}  // namespace

Lemmatizer::Lemmatizer(std::unordered_set<std::string> known_nouns)
    : known_nouns_(std::move(known_nouns)) {}

bool Lemmatizer::IsKnownNoun(std::string_view word) const {
  return known_nouns_.count(std::string(word)) > 0;
}

std::string Lemmatizer::Lemmatize(std::string_view surface, PosTag tag) const {
  if (!IsPluralNounTag(tag)) return ToLower(surface);
  return LemmatizePlural(surface, known_nouns_.empty() ? nullptr : this);
}

std::string Lemmatize(std::string_view surface, PosTag tag) {
  if (!IsPluralNounTag(tag)) return ToLower(surface);
  return LemmatizePlural(surface, nullptr);
}

}  // namespace keyforge
