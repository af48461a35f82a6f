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
#include <string>
#include <vector>

#include "support/error.hpp"

namespace apkscan::apk {

enum class EntryKind { Manifest, Dex, LayoutXml, ResourceTable, Other };

const char* entry_kind_name(EntryKind kind);

// Pure function of the entry name; the classification the rest of the
// pipeline keys on.
EntryKind classify_entry(const std::string& name);

struct ApkEntry {
  std::string name;
  EntryKind kind = EntryKind::Other;
  std::vector<uint8_t> data;

  bool operator==(const ApkEntry&) const = default;
};

// An opened APK.  Immutable after open_apk; safe to share read-only.
struct ApkArchive {
  std::string path;
  std::vector<ApkEntry> entries;
  std::string sha256_hex;

  const ApkEntry* find(const std::string& name) const;
};

// Parses the ZIP container (stored and deflate entries only), decompresses
// every entry and classifies it.  Validates the APK shape: exactly one
// AndroidManifest.xml, classes.dex present, classesN.dex consecutive.
ApkArchive open_apk(const std::string& path);

// Same, over an in-memory buffer (used by tests and the corpus driver).
ApkArchive open_apk_bytes(std::vector<uint8_t> bytes, const std::string& path);

std::vector<const ApkEntry*> entries_of_kind(const ApkArchive& archive,
                                             EntryKind kind);

}  // namespace apkscan::apk
