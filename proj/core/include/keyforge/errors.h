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

#ifndef KEYFORGE_ERRORS_H_
#define KEYFORGE_ERRORS_H_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace keyforge {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

// A resource file has a malformed line. The message names the line number.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A dataset document without gold keys, or keys without a document.
class MissingPairError : public Error {
 public:
  using Error::Error;
};

class DegenerateDocumentError : public Error {
 public:
  using Error::Error;
};

// A pipeline step was requested without the resource it needs.
class MissingResourceError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

class ZeroBaselineError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration values (bad factor, bad tag set, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Non-fatal diagnostics. The default sink writes "keyforge: warning: ..." to
// stderr; tests and tools may replace it.
using WarningSink = std::function<void(std::string_view)>;
// Installs `sink` and returns the previous one; nullptr discards warnings.
WarningSink SetWarningSink(WarningSink sink);
void Warn(std::string_view message);

}  // namespace keyforge

#endif  // KEYFORGE_ERRORS_H_
