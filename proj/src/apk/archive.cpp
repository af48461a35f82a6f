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

#include "apk/archive.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <set>

#include "support/bytes.hpp"
#include "support/digest.hpp"
#include "support/text.hpp"

namespace apkscan::apk {

namespace {

constexpr uint32_t kLocalHeaderSig = 0x04034b50;    // PK\x03\x04
constexpr uint32_t kCentralDirSig = 0x02014b50;     // PK\x01\x02
constexpr uint32_t kEndOfCentralDirSig = 0x06054b50;  // PK\x05\x06

constexpr uint16_t kMethodStored = 0;
constexpr uint16_t kMethodDeflate = 8;

std::vector<uint8_t> inflate_raw(std::span<const uint8_t> in,
                                 size_t expected_size,
                                 const std::string& entry) {
  std::vector<uint8_t> out(expected_size);
  z_stream zs{};
  // negative window bits: raw deflate stream, no zlib wrapper.
  if (inflateInit2(&zs, -15) != Z_OK) {
    throw Error(ErrorCode::TruncatedArchive, "inflate init failed", entry);
  }
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = inflate(&zs, Z_FINISH);
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || zs.total_out != expected_size) {
    throw Error(ErrorCode::TruncatedArchive,
                "deflate stream did not yield the declared size", entry);
  }
  return out;
}

struct CentralEntry {
  std::string name;
  uint16_t method = 0;
  uint32_t crc32 = 0;
  uint32_t compressed_size = 0;
  uint32_t uncompressed_size = 0;
  uint32_t local_header_offset = 0;
};

// Locates the end-of-central-directory record by scanning backwards over the
// trailing comment (at most 64 KiB per the format).
size_t find_eocd(std::span<const uint8_t> data) {
  if (data.size() < 22) {
    throw Error(ErrorCode::NotAZip, "file too small for a ZIP container");
  }
  size_t max_back = std::min<size_t>(data.size(), 22 + 0xffff);
  for (size_t back = 22; back <= max_back; ++back) {
    size_t pos = data.size() - back;
    uint32_t sig = static_cast<uint32_t>(data[pos]) |
                   (static_cast<uint32_t>(data[pos + 1]) << 8) |
                   (static_cast<uint32_t>(data[pos + 2]) << 16) |
                   (static_cast<uint32_t>(data[pos + 3]) << 24);
    if (sig == kEndOfCentralDirSig) return pos;
  }
  throw Error(ErrorCode::NotAZip, "no end-of-central-directory record");
}

std::vector<CentralEntry> read_central_directory(std::span<const uint8_t> data) {
  size_t eocd_pos = find_eocd(data);
  ByteReader eocd(data.subspan(eocd_pos), ErrorCode::TruncatedArchive);
  eocd.u32();  // signature
  uint16_t disk = eocd.u16();
  uint16_t cd_disk = eocd.u16();
  uint16_t entries_this_disk = eocd.u16();
  uint16_t entries_total = eocd.u16();
  eocd.u32();  // central directory size
  uint32_t cd_offset = eocd.u32();
  if (disk != 0 || cd_disk != 0 || entries_this_disk != entries_total) {
    throw Error(ErrorCode::TruncatedArchive, "multi-disk archives unsupported");
  }
  if (entries_total == 0xffff || cd_offset == 0xffffffffu) {
    throw Error(ErrorCode::TruncatedArchive, "ZIP64 archives unsupported");
  }
  if (cd_offset > data.size()) {
    throw Error(ErrorCode::TruncatedArchive, "central directory offset past EOF",
                {}, cd_offset);
  }

  std::vector<CentralEntry> entries;
  entries.reserve(entries_total);
  ByteReader r(data, ErrorCode::TruncatedArchive);
  r.seek(cd_offset);
  for (uint32_t i = 0; i < entries_total; ++i) {
    if (r.u32() != kCentralDirSig) {
      throw Error(ErrorCode::TruncatedArchive, "bad central directory signature",
                  {}, r.pos() - 4);
    }
    r.u16();  // version made by
    r.u16();  // version needed
    r.u16();  // general purpose flags (sizes below are authoritative)
    CentralEntry e;
    e.method = r.u16();
    r.u16();  // mod time
    r.u16();  // mod date
    e.crc32 = r.u32();
    e.compressed_size = r.u32();
    e.uncompressed_size = r.u32();
    uint16_t name_len = r.u16();
    uint16_t extra_len = r.u16();
    uint16_t comment_len = r.u16();
    r.u16();  // disk number start
    r.u16();  // internal attributes
    r.u32();  // external attributes
    e.local_header_offset = r.u32();
    auto name_bytes = r.bytes(name_len);
    e.name.assign(name_bytes.begin(), name_bytes.end());
    r.skip(extra_len);
    r.skip(comment_len);
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<uint8_t> extract_entry(std::span<const uint8_t> data,
                                   const CentralEntry& e) {
  ByteReader r(data, ErrorCode::TruncatedArchive, e.name);
  r.seek(e.local_header_offset);
  if (r.u32() != kLocalHeaderSig) {
    throw Error(ErrorCode::TruncatedArchive, "bad local header signature",
                e.name, e.local_header_offset);
  }
  r.u16();  // version needed
  r.u16();  // flags
  r.u16();  // method (central directory value wins)
  r.u16();  // mod time
  r.u16();  // mod date
  r.u32();  // crc (may be zero with a data descriptor)
  r.u32();  // compressed size (ditto)
  r.u32();  // uncompressed size (ditto)
  uint16_t name_len = r.u16();
  uint16_t extra_len = r.u16();
  r.skip(name_len);
  r.skip(extra_len);

  auto payload = r.bytes(e.compressed_size);
  std::vector<uint8_t> content;
  switch (e.method) {
    case kMethodStored:
      if (e.compressed_size != e.uncompressed_size) {
        throw Error(ErrorCode::TruncatedArchive,
                    "stored entry with mismatched sizes", e.name);
      }
      content.assign(payload.begin(), payload.end());
      break;
    case kMethodDeflate:
      content = inflate_raw(payload, e.uncompressed_size, e.name);
      break;
    default:
      throw Error(ErrorCode::TruncatedArchive,
                  "unsupported compression method " + std::to_string(e.method),
                  e.name);
  }
  if (crc32_of(content) != e.crc32) {
    throw Error(ErrorCode::TruncatedArchive, "CRC mismatch", e.name);
  }
  return content;
}

void validate_shape(const std::vector<ApkEntry>& entries) {
  size_t manifests = 0;
  std::set<int> dex_numbers;
  for (const auto& e : entries) {
    if (e.kind == EntryKind::Manifest) ++manifests;
    if (e.kind == EntryKind::Dex) {
      std::string stem = e.name.substr(7);  // after "classes"
      stem = stem.substr(0, stem.size() - 4);  // before ".dex"
      dex_numbers.insert(stem.empty() ? 1 : std::stoi(stem));
    }
  }
  if (manifests == 0) {
    throw Error(ErrorCode::MissingManifest, "archive has no AndroidManifest.xml");
  }
  if (dex_numbers.empty()) {
    throw Error(ErrorCode::NoDexFound, "archive has no classes.dex");
  }
  int expected = 1;
  for (int n : dex_numbers) {
    if (n != expected) {
      std::string missing =
          expected == 1 ? "classes.dex" : "classes" + std::to_string(expected) + ".dex";
      throw Error(ErrorCode::MultidexGap,
                  missing + " missing from multidex sequence");
    }
    ++expected;
  }
}

}  // namespace

const char* entry_kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::Manifest: return "Manifest";
    case EntryKind::Dex: return "Dex";
    case EntryKind::LayoutXml: return "LayoutXml";
    case EntryKind::ResourceTable: return "ResourceTable";
    case EntryKind::Other: return "Other";
  }
  return "Other";
}

EntryKind classify_entry(const std::string& name) {
  if (name == "AndroidManifest.xml") return EntryKind::Manifest;
  if (name == "resources.arsc") return EntryKind::ResourceTable;
  if (starts_with(name, "classes") && ends_with(name, ".dex") &&
      name.find('/') == std::string::npos) {
    std::string stem = name.substr(7, name.size() - 7 - 4);
    if (stem.empty()) return EntryKind::Dex;
    if (std::all_of(stem.begin(), stem.end(),
                    [](char c) { return c >= '0' && c <= '9'; }) &&
        stem[0] != '0') {
      // classes.dex has no number; numbering starts at classes2.dex.
      if (stem != "1") return EntryKind::Dex;
    }
    return EntryKind::Other;
  }
  if (starts_with(name, "res/layout") && ends_with(name, ".xml")) {
    return EntryKind::LayoutXml;
  }
  return EntryKind::Other;
}

const ApkEntry* ApkArchive::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

ApkArchive open_apk_bytes(std::vector<uint8_t> bytes, const std::string& path) {
  if (bytes.size() < 4 || bytes[0] != 'P' || bytes[1] != 'K') {
    throw Error(ErrorCode::NotAZip, "not a ZIP container (bad magic)", path);
  }
  ApkArchive archive;
  archive.path = path;
  archive.sha256_hex = hex_encode(sha256(bytes));

  auto central = read_central_directory(bytes);
  archive.entries.reserve(central.size());
  for (const auto& ce : central) {
    ApkEntry entry;
    entry.name = ce.name;
    entry.kind = classify_entry(ce.name);
    entry.data = extract_entry(bytes, ce);
    archive.entries.push_back(std::move(entry));
  }
  validate_shape(archive.entries);
  return archive;
}

ApkArchive open_apk(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path, path);
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return open_apk_bytes(std::move(bytes), path);
}

std::vector<const ApkEntry*> entries_of_kind(const ApkArchive& archive,
                                             EntryKind kind) {
  std::vector<const ApkEntry*> out;
  for (const auto& e : archive.entries) {
    if (e.kind == kind) out.push_back(&e);
  }
  return out;
}

}  // namespace apkscan::apk
