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

#ifndef KEYFORGE_TOOLS_CLI_H_
#define KEYFORGE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace keyforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs the keyforge command line. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

// Expands `--config FILE` (key=value lines) into `--key=value` arguments
// placed right after the subcommand, ahead of the user's own flags, so
// explicit flags win. Throws keyforge::ConfigError or FormatError.
std::vector<std::string> ExpandConfig(const std::vector<std::string>& args);

}  // namespace keyforge::cli

#endif  // KEYFORGE_TOOLS_CLI_H_
