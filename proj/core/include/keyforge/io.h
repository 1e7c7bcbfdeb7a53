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

// File and string helpers shared by the loaders.

#ifndef KEYFORGE_IO_H_
#define KEYFORGE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace keyforge {

bool IsValidUtf8(std::string_view bytes);

// Reads a whole file. Throws IoError if it cannot be opened and
// EncodingError if the content is not valid UTF-8.
std::string ReadTextFile(const std::filesystem::path& path);

// Truncates and writes. Throws IoError on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view content);

// Splits on '\n', dropping a trailing '\r' from each line (LF or CRLF input).
// A final empty segment after a trailing newline is not returned.
std::vector<std::string_view> SplitLines(std::string_view text);

std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);
std::vector<std::string_view> SplitOn(std::string_view s, char sep);

// ASCII-only predicates. Bytes >= 0x80 are treated as letters so that UTF-8
// words are never split apart.
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsWordByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || IsAsciiUpper(c) ||
         IsAsciiDigit(c);
}

}  // namespace keyforge

#endif  // KEYFORGE_IO_H_
