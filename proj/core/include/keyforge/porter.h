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

#ifndef KEYFORGE_PORTER_H_
#define KEYFORGE_PORTER_H_

#include <string>
#include <string_view>

namespace keyforge {

// Porter (1980) stemmer as published in Martin Porter's reference C
// implementation, including its two departures from the 1980 description
// ("bli" -> "ble", "logi" -> "log"). Input is lowercased first; words of
// length <= 2 are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace keyforge

#endif  // KEYFORGE_PORTER_H_
