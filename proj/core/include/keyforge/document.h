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

#ifndef KEYFORGE_DOCUMENT_H_
#define KEYFORGE_DOCUMENT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyforge/lemmatizer.h"
#include "keyforge/tagger.h"
#include "keyforge/text.h"

namespace keyforge {

// A tokenized, sentence-split and tagged text.
struct Document {
  std::string text;
  std::vector<TaggedToken> tokens;
  // Token index range [begin, end) of each sentence, in order.
  std::vector<Span> sentences;

  int sentence_count() const { return static_cast<int>(sentences.size()); }
  std::span<const TaggedToken> Sentence(size_t i) const {
    return std::span<const TaggedToken>(tokens).subspan(
        sentences[i].begin, sentences[i].size());
  }
};

// Immutable bundle of the splitter, tagger and lemmatizer. Safe to share
// across threads.
class TextProcessor {
 public:
  TextProcessor(SentenceSplitter splitter, Tagger tagger,
                Lemmatizer lemmatizer);

  // Loads abbreviations.txt, lexicon.tsv and tag_rules.tsv from `data_dir`.
  // The lemmatizer's known nouns are the lexicon's lowercase NN entries.
  static TextProcessor FromDataDir(const std::filesystem::path& data_dir);

  Document Process(std::string text) const;

  // Tags, lemmatizes and stems an already tokenized stream.
  std::vector<TaggedToken> Annotate(std::vector<Token> tokens) const;

  // Tags a short phrase (a gold keyword, a thesaurus term) as one sentence,
  // out of any document context.
  std::vector<TaggedToken> AnnotatePhrase(std::string_view phrase) const;

  // Lemma-normal form used for thesaurus and gazetteer matching: lowercase,
  // tokenize, tag in isolation, lemmatize, join; repeated until the result
  // no longer changes, so the output is a fixpoint.
  std::string Canonicalize(std::string_view phrase) const;

  const SentenceSplitter& splitter() const { return splitter_; }
  const Tagger& tagger() const { return tagger_; }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  SentenceSplitter splitter_;
  Tagger tagger_;
  Lemmatizer lemmatizer_;
};

}  // namespace keyforge

#endif  // KEYFORGE_DOCUMENT_H_
