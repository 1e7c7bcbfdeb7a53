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

#include "keyforge/corpus.h"

#include <algorithm>
#include <map>
#include <utility>

#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

namespace fs = std::filesystem;

std::string_view StripBom(std::string_view s) {
  if (s.size() >= 3 && s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
  return s;
}

std::map<std::string, fs::path> FilesWithExtension(const fs::path& dir,
                                                   std::string_view ext) {
  std::map<std::string, fs::path> files;
  if (!fs::is_directory(dir)) {
    throw IoError("missing directory " + dir.string());
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == ext) {
      files[entry.path().stem().string()] = entry.path();
    }
  }
  return files;
}

std::vector<std::string> NonEmptyLines(std::string_view content) {
  std::vector<std::string> lines;
  for (std::string_view line : SplitLines(StripBom(content))) {
    line = Trim(line);
    if (!line.empty()) lines.emplace_back(line);
  }
  return lines;
}

size_t CountTokens(std::string_view phrase) {
  size_t n = 0;
  bool in_word = false;
  for (char c : phrase) {
    if (c == ' ') {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

}  // namespace

const std::vector<std::string>& KeDataset::GoldFor(const std::string& id) const {
  static const std::vector<std::string> kEmpty;
  auto it = gold.find(id);
  return it == gold.end() ? kEmpty : it->second;
}

size_t KeDataset::gold_count() const {
  size_t n = 0;
  for (const auto& [id, keys] : gold) n += keys.size();
  return n;
}

KeDataset LoadDataset(const fs::path& dir) {
  auto texts = FilesWithExtension(dir / "docsutf8", ".txt");
  auto keys = FilesWithExtension(dir / "keys", ".key");
  for (const auto& [id, path] : texts) {
    if (!keys.count(id)) {
      throw MissingPairError("no keys/" + id + ".key for " + path.string());
    }
  }
  for (const auto& [id, path] : keys) {
    if (!texts.count(id)) {
      throw MissingPairError("no docsutf8/" + id + ".txt for " + path.string());
    }
  }
  KeDataset ds;
  fs::path canonical = dir;
  if (!canonical.has_filename()) canonical = canonical.parent_path();
  ds.name = canonical.filename().string();
  for (const auto& [id, path] : texts) {
    ds.documents.push_back({id, std::string(StripBom(ReadTextFile(path)))});
    ds.gold[id] = NonEmptyLines(ReadTextFile(keys.at(id)));
  }
  return ds;
}

DictionarySet MakeDictionary(std::span<const std::string> words) {
  DictionarySet dict;
  for (const std::string& w : words) {
    std::string_view trimmed = Trim(w);
    if (!trimmed.empty()) dict.words.insert(ToLower(trimmed));
  }
  return dict;
}

DictionarySet LoadWordlist(const fs::path& path) {
  std::vector<std::string> lines = NonEmptyLines(ReadTextFile(path));
  DictionarySet dict = MakeDictionary(lines);
  if (dict.words.empty()) {
    throw FormatError(path.string() + ": wordlist is empty");
  }
  return dict;
}

const Thesaurus& Thesaurus::Empty() {
  static const Thesaurus kEmpty;
  return kEmpty;
}

Thesaurus MakeThesaurus(std::string name, std::span<const std::string> lines,
                        const TextProcessor& text) {
  Thesaurus t;
  t.name = std::move(name);
  for (const std::string& line : lines) {
    std::string term = text.Canonicalize(line);
    if (!term.empty()) t.terms.insert(std::move(term));
  }
  return t;
}

Thesaurus LoadThesaurus(const fs::path& path, const TextProcessor& text) {
  std::vector<std::string> lines = NonEmptyLines(ReadTextFile(path));
  if (lines.empty()) Warn("thesaurus " + path.string() + " is empty");
  return MakeThesaurus(path.stem().string(), lines, text);
}

std::string CleanWikiTitle(std::string_view raw) {
  std::string title(Trim(raw));
  std::replace(title.begin(), title.end(), '_', ' ');
  if (!title.empty() && title.back() == ')') {
    size_t open = title.rfind(" (");
    if (open != std::string::npos && open > 0) title.resize(open);
  }
  return std::string(Trim(title));
}

EntityGazetteer MakeGazetteer(std::span<const std::string> raw_titles,
                              const TextProcessor& text,
                              const GazetteerOptions& options) {
  EntityGazetteer g;
  for (const std::string& raw : raw_titles) {
    std::string cleaned = CleanWikiTitle(raw);
    if (cleaned.empty()) continue;
    if (options.max_tokens > 0 &&
        CountTokens(cleaned) > options.max_tokens) {
      continue;  // cheap pre-check on whitespace tokens
    }
    std::string title = text.Canonicalize(cleaned);
    if (title.empty()) continue;
    size_t n = CountTokens(title);
    if (options.max_tokens > 0 && n > options.max_tokens) continue;
    if (n == 1 && options.common_words != nullptr &&
        (options.common_words->Contains(title) ||
         options.common_words->Contains(ToLower(cleaned)))) {
      ++g.removed_common_unigrams;
      continue;
    }
    g.titles.insert(std::move(title));
  }
  return g;
}

EntityGazetteer LoadWikiTitles(const fs::path& path, const TextProcessor& text,
                               const GazetteerOptions& options) {
  std::vector<std::string> lines = NonEmptyLines(ReadTextFile(path));
  return MakeGazetteer(lines, text, options);
}

EntityGazetteer LoadWikiTitles(const fs::path& path,
                               const DictionarySet& dictionary,
                               const TextProcessor& text) {
  GazetteerOptions options;
  options.common_words = &dictionary;
  return LoadWikiTitles(path, text, options);
}

}  // namespace keyforge
