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

// Loaders for keyword datasets, thesauri, Wikipedia title lists and
// dictionary wordlists. Everything returned here is immutable after loading.

#ifndef KEYFORGE_CORPUS_H_
#define KEYFORGE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "keyforge/document.h"

namespace keyforge {

struct DatasetDocument {
  std::string id;
  std::string text;
};

// A keyword-extraction dataset: documents sorted by id plus gold keywords.
struct KeDataset {
  std::string name;
  std::vector<DatasetDocument> documents;
  std::map<std::string, std::vector<std::string>> gold;

  const std::vector<std::string>& GoldFor(const std::string& id) const;
  size_t gold_count() const;
};

// Reads `dir/docsutf8/*.txt` and `dir/keys/*.key`, pairing by basename. Each
// trimmed non-empty line of a .key file is one gold keyword.
// Throws MissingPairError for an unpaired file and EncodingError on invalid
// UTF-8. The dataset name is the directory's basename.
KeDataset LoadDataset(const std::filesystem::path& dir);

struct DictionarySet {
  std::unordered_set<std::string> words;  // lowercase

  bool Contains(std::string_view word) const {
    return words.count(std::string(word)) > 0;
  }
  size_t size() const { return words.size(); }
};

// One word per line, lowercased; blank lines skipped. Throws FormatError if
// the file holds no words.
DictionarySet LoadWordlist(const std::filesystem::path& path);
DictionarySet MakeDictionary(std::span<const std::string> words);

struct Thesaurus {
  std::string name;
  std::unordered_set<std::string> terms;  // TextProcessor::Canonicalize forms

  bool Contains(std::string_view term) const {
    return terms.count(std::string(term)) > 0;
  }
  size_t size() const { return terms.size(); }
  bool operator==(const Thesaurus&) const = default;

  // Shared empty instance; boosting with it is a no-op.
  static const Thesaurus& Empty();
};

// One term per line; each term is canonicalized and duplicates collapse.
// An empty file yields an empty thesaurus and a warning.
Thesaurus LoadThesaurus(const std::filesystem::path& path,
                        const TextProcessor& text);
Thesaurus MakeThesaurus(std::string name, std::span<const std::string> lines,
                        const TextProcessor& text);

struct EntityGazetteer {
  std::unordered_set<std::string> titles;  // canonical, lowercase
  size_t removed_common_unigrams = 0;

  bool Contains(std::string_view phrase) const {
    return titles.count(std::string(phrase)) > 0;
  }
  size_t size() const { return titles.size(); }
};

struct GazetteerOptions {
  // Unigram titles found here are dropped. nullptr keeps every unigram.
  const DictionarySet* common_words = nullptr;
  // Titles with more tokens are dropped; 0 keeps all lengths.
  size_t max_tokens = 3;
};

// Underscores to spaces, then strips one trailing " (...)" group:
// "Python_(programming_language)" -> "Python".
std::string CleanWikiTitle(std::string_view raw);

// One page title per line. Titles are cleaned, canonicalized, filtered per
// `options` and deduplicated.
EntityGazetteer LoadWikiTitles(const std::filesystem::path& path,
                               const TextProcessor& text,
                               const GazetteerOptions& options);
EntityGazetteer MakeGazetteer(std::span<const std::string> raw_titles,
                              const TextProcessor& text,
                              const GazetteerOptions& options);

// Gazetteer used for boosting: common-word unigrams removed, titles capped
// at three tokens.
EntityGazetteer LoadWikiTitles(const std::filesystem::path& path,
                               const DictionarySet& dictionary,
                               const TextProcessor& text);

}  // namespace keyforge

#endif  // KEYFORGE_CORPUS_H_
