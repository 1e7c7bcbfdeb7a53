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

// Location of the shipped resource files (lexicon, rules, stopwords, ...).

#ifndef KEYFORGE_RESOURCES_H_
#define KEYFORGE_RESOURCES_H_

#include <filesystem>
#include <optional>

#include "keyforge/corpus.h"

namespace keyforge {

inline constexpr char kDataEnvVar[] = "KEYFORGE_DATA";

// First existing directory among: `override`, $KEYFORGE_DATA, the source
// tree's data/ (build tree use), the installed share/keyforge. Throws
// IoError if none contains lexicon.tsv.
std::filesystem::path ResolveDataDir(
    const std::optional<std::filesystem::path>& override = std::nullopt);

// data_dir/stopwords.txt.
DictionarySet LoadStopwords(const std::filesystem::path& data_dir);

}  // namespace keyforge

#endif  // KEYFORGE_RESOURCES_H_
