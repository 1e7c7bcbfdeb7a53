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

#include "keyforge/resources.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "keyforge/errors.h"

namespace keyforge {

namespace fs = std::filesystem;

fs::path ResolveDataDir(const std::optional<fs::path>& override) {
  std::vector<fs::path> candidates;
  if (override) candidates.push_back(*override);
  if (const char* env = std::getenv(kDataEnvVar); env && *env) {
    candidates.emplace_back(env);
  }
  candidates.emplace_back(KEYFORGE_BUILD_DATA_DIR);
  candidates.emplace_back(KEYFORGE_INSTALL_DATA_DIR);
  for (const fs::path& dir : candidates) {
    std::error_code ec;
    if (fs::is_regular_file(dir / "lexicon.tsv", ec)) return dir;
    if (override && dir == *override) {
      throw IoError("data directory " + dir.string() +
                    " has no lexicon.tsv");
    }
  }
  throw IoError(std::string("no resource directory found; set ") +
                kDataEnvVar + " or pass --data-dir");
}

DictionarySet LoadStopwords(const fs::path& data_dir) {
  return LoadWordlist(data_dir / "stopwords.txt");
}

}  // namespace keyforge
