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

#include "keyforge/document.h"

#include <utility>

#include "keyforge/io.h"
#include "keyforge/porter.h"

namespace keyforge {
namespace {

constexpr int kMaxCanonicalRounds = 4;

}  // namespace

TextProcessor::TextProcessor(SentenceSplitter splitter, Tagger tagger,
                             Lemmatizer lemmatizer)
    : splitter_(std::move(splitter)),
      tagger_(std::move(tagger)),
      lemmatizer_(std::move(lemmatizer)) {}

TextProcessor TextProcessor::FromDataDir(
    const std::filesystem::path& data_dir) {
  Lexicon lexicon = Lexicon::FromFile(data_dir / "lexicon.tsv");
  Lemmatizer lemmatizer(lexicon.WordsWithTag(PosTag::kNN));
  return TextProcessor(
      SentenceSplitter::FromFile(data_dir / "abbreviations.txt"),
      Tagger(std::move(lexicon), LoadTagRules(data_dir / "tag_rules.tsv")),
      std::move(lemmatizer));
}

std::vector<TaggedToken> TextProcessor::Annotate(
    std::vector<Token> tokens) const {
  std::vector<PosTag> tags = tagger_.Tag(tokens);
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    TaggedToken t;
    t.lemma = lemmatizer_.Lemmatize(tokens[i].surface, tags[i]);
    t.stem = PorterStem(tokens[i].surface);
    t.tag = tags[i];
    t.token = std::move(tokens[i]);
    out.push_back(std::move(t));
  }
  return out;
}

Document TextProcessor::Process(std::string text) const {
  Document doc;
  doc.text = std::move(text);
  std::vector<Token> tokens;
  int index = 0;
  for (const Span& span : splitter_.Split(doc.text)) {
    std::vector<Token> sentence =
        Tokenize(span.In(doc.text), span.begin, index);
    if (sentence.empty()) continue;
    doc.sentences.push_back({tokens.size(), tokens.size() + sentence.size()});
    for (Token& t : sentence) tokens.push_back(std::move(t));
    ++index;
  }
  doc.tokens = Annotate(std::move(tokens));
  return doc;
}

std::vector<TaggedToken> TextProcessor::AnnotatePhrase(
    std::string_view phrase) const {
  return Annotate(Tokenize(phrase));
}

std::string TextProcessor::Canonicalize(std::string_view phrase) const {
  std::string current = ToLower(Trim(phrase));
  for (int round = 0; round < kMaxCanonicalRounds; ++round) {
    std::string next = NormalizePhrase(AnnotatePhrase(current), NormMode::kLemma);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace keyforge
