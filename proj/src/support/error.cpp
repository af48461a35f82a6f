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

#include "support/error.hpp"

namespace apkscan {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAZip: return "NotAZip";
    case ErrorCode::MissingManifest: return "MissingManifest";
    case ErrorCode::NoDexFound: return "NoDexFound";
    case ErrorCode::TruncatedArchive: return "TruncatedArchive";
    case ErrorCode::MultidexGap: return "MultidexGap";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::TruncatedChunk: return "TruncatedChunk";
    case ErrorCode::StringIndexOutOfRange: return "StringIndexOutOfRange";
    case ErrorCode::UnbalancedElements: return "UnbalancedElements";
    case ErrorCode::NotAManifest: return "NotAManifest";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::TruncatedSection: return "TruncatedSection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MethodNotFound: return "MethodNotFound";
    case ErrorCode::AbstractOrNative: return "AbstractOrNative";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace apkscan
