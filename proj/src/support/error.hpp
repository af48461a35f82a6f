// Copyright (C) 2026 The apkscan authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apkscan {

enum class ErrorCode {
  // container
  NotAZip,
  MissingManifest,
  NoDexFound,
  TruncatedArchive,
  MultidexGap,
  // axml
  BadMagic,
  TruncatedChunk,
  StringIndexOutOfRange,
  UnbalancedElements,
  NotAManifest,
  // dex
  UnsupportedVersion,
  TruncatedSection,
  IndexOutOfRange,
  MethodNotFound,
  AbstractOrNative,
  MalformedCode,
  // pii loaders
  BadHeader,
  DimensionMismatch,
  NonFiniteValue,
  // generic
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

// All fatal analysis errors are thrown as Error.  `entry` names the archive
// member (or file) being processed and `offset` the byte position, when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string entry = {},
        uint64_t offset = 0)
      : std::runtime_error(std::move(message)),
        code_(code),
        entry_(std::move(entry)),
        offset_(offset) {}

  ErrorCode code() const { return code_; }
  const std::string& entry() const { return entry_; }
  uint64_t offset() const { return offset_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
  std::string entry_;
  uint64_t offset_;
};

// Non-fatal events surfaced in reports (MUTF-8 repairs, unresolved resource
// references, taint depth truncation, ...).
struct Warning {
  std::string kind;
  std::string message;

  bool operator==(const Warning&) const = default;
};

using WarningList = std::vector<Warning>;

inline void warn(WarningList* warnings, std::string kind, std::string message) {
  if (warnings != nullptr) {
    warnings->push_back({std::move(kind), std::move(message)});
  }
}

}  // namespace apkscan
