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

#include "dex/dex_file.hpp"

#include <algorithm>
#include <cstring>

#include "support/bytes.hpp"

namespace apkscan::dex {

namespace {

constexpr uint32_t kNoIndex = 0xffffffffu;
constexpr size_t kHeaderSize = 0x70;

void append_utf8_cp(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// MUTF-8: 1-3 byte sequences, U+0000 encoded as C0 80, supplementary
// characters as CESU-8 surrogate pairs.  Invalid sequences decode to U+FFFD
// and set `repaired`.
std::string decode_mutf8(ByteReader& r, bool& repaired) {
  std::string out;
  std::vector<uint32_t> units;  // UTF-16 code units first, then combined
  while (true) {
    uint8_t b1 = r.u8();
    if (b1 == 0) break;
    if (b1 < 0x80) {
      units.push_back(b1);
    } else if ((b1 & 0xE0) == 0xC0) {
      uint8_t b2 = r.u8();
      if ((b2 & 0xC0) != 0x80) {
        units.push_back(0xFFFD);
        repaired = true;
        continue;
      }
      units.push_back(((b1 & 0x1F) << 6) | (b2 & 0x3F));
    } else if ((b1 & 0xF0) == 0xE0) {
      uint8_t b2 = r.u8();
      uint8_t b3 = r.u8();
      if ((b2 & 0xC0) != 0x80 || (b3 & 0xC0) != 0x80) {
        units.push_back(0xFFFD);
        repaired = true;
        continue;
      }
      units.push_back(((b1 & 0x0F) << 12) | ((b2 & 0x3F) << 6) | (b3 & 0x3F));
    } else {
      units.push_back(0xFFFD);
      repaired = true;
    }
  }
  for (size_t i = 0; i < units.size(); ++i) {
    uint32_t u = units[i];
    if (u >= 0xD800 && u <= 0xDBFF && i + 1 < units.size() &&
        units[i + 1] >= 0xDC00 && units[i + 1] <= 0xDFFF) {
      uint32_t cp = 0x10000 + ((u - 0xD800) << 10) + (units[i + 1] - 0xDC00);
      append_utf8_cp(out, cp);
      ++i;
      continue;
    }
    if (u >= 0xD800 && u <= 0xDFFF) {
      append_utf8_cp(out, 0xFFFD);
      repaired = true;
      continue;
    }
    append_utf8_cp(out, u);
  }
  return out;
}

struct Header {
  uint32_t string_ids_size, string_ids_off;
  uint32_t type_ids_size, type_ids_off;
  uint32_t proto_ids_size, proto_ids_off;
  uint32_t field_ids_size, field_ids_off;
  uint32_t method_ids_size, method_ids_off;
  uint32_t class_defs_size, class_defs_off;
};

void check_section(const Header&, size_t file_size, uint32_t off, uint32_t count,
                   size_t item_size, const std::string& what,
                   const std::string& provenance) {
  if (count == 0) return;
  uint64_t end = static_cast<uint64_t>(off) + static_cast<uint64_t>(count) * item_size;
  if (off >= file_size || end > file_size) {
    throw Error(ErrorCode::TruncatedSection,
                what + " section extends past end of file", provenance, off);
  }
}

}  // namespace

std::string Prototype::signature() const {
  std::string out = param_signature();
  out += return_type;
  return out;
}

std::string Prototype::param_signature() const {
  std::string out = "(";
  for (const auto& p : parameters) out += p;
  out += ")";
  return out;
}

const std::string& DexFile::string_at(uint32_t idx) const {
  if (idx >= strings_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "string index " + std::to_string(idx) + " out of range",
                provenance_);
  }
  return strings_[idx];
}

const MethodRef& DexFile::method_at(uint32_t idx) const {
  if (idx >= methods_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "method index " + std::to_string(idx) + " out of range",
                provenance_);
  }
  return methods_[idx];
}

const FieldRef& DexFile::field_at(uint32_t idx) const {
  if (idx >= fields_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "field index " + std::to_string(idx) + " out of range",
                provenance_);
  }
  return fields_[idx];
}

const std::string& DexFile::type_at(uint32_t idx) const {
  if (idx >= types_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "type index " + std::to_string(idx) + " out of range",
                provenance_);
  }
  return types_[idx];
}

DexFile DexFile::parse(std::vector<uint8_t> data, std::string provenance,
                       WarningList* warnings) {
  DexFile dex;
  dex.provenance_ = std::move(provenance);
  dex.data_ = std::move(data);
  const auto& bytes = dex.data_;

  if (bytes.size() < 8 || std::memcmp(bytes.data(), "dex\n", 4) != 0) {
    throw Error(ErrorCode::BadMagic, "not a DEX file", dex.provenance_);
  }
  std::string version(reinterpret_cast<const char*>(bytes.data()) + 4, 3);
  if (version != "035" && version != "037" && version != "038" &&
      version != "039") {
    throw Error(ErrorCode::UnsupportedVersion,
                "unsupported DEX version " + version, dex.provenance_);
  }
  if (bytes.size() < kHeaderSize) {
    throw Error(ErrorCode::TruncatedSection, "header truncated", dex.provenance_);
  }

  ByteReader r(bytes, ErrorCode::TruncatedSection, dex.provenance_);
  r.seek(0x38);  // past magic, checksum, signature, file_size, header_size,
                 // endian_tag, link_size/off, map_off
  Header h{};
  h.string_ids_size = r.u32();
  h.string_ids_off = r.u32();
  h.type_ids_size = r.u32();
  h.type_ids_off = r.u32();
  h.proto_ids_size = r.u32();
  h.proto_ids_off = r.u32();
  h.field_ids_size = r.u32();
  h.field_ids_off = r.u32();
  h.method_ids_size = r.u32();
  h.method_ids_off = r.u32();
  h.class_defs_size = r.u32();
  h.class_defs_off = r.u32();

  size_t n = bytes.size();
  check_section(h, n, h.string_ids_off, h.string_ids_size, 4, "string_ids",
                dex.provenance_);
  check_section(h, n, h.type_ids_off, h.type_ids_size, 4, "type_ids",
                dex.provenance_);
  check_section(h, n, h.proto_ids_off, h.proto_ids_size, 12, "proto_ids",
                dex.provenance_);
  check_section(h, n, h.field_ids_off, h.field_ids_size, 8, "field_ids",
                dex.provenance_);
  check_section(h, n, h.method_ids_off, h.method_ids_size, 8, "method_ids",
                dex.provenance_);
  check_section(h, n, h.class_defs_off, h.class_defs_size, 32, "class_defs",
                dex.provenance_);

  // strings
  dex.strings_.reserve(h.string_ids_size);
  bool any_repair = false;
  std::vector<std::string> raw_order;
  for (uint32_t i = 0; i < h.string_ids_size; ++i) {
    r.seek(h.string_ids_off + i * 4);
    uint32_t off = r.u32();
    if (off >= n) {
      throw Error(ErrorCode::TruncatedSection, "string data offset past EOF",
                  dex.provenance_, off);
    }
    r.seek(off);
    r.uleb128();  // utf16 length, not needed for decoding
    bool repaired = false;
    dex.strings_.push_back(decode_mutf8(r, repaired));
    any_repair = any_repair || repaired;
  }
  if (any_repair) {
    warn(warnings, "mutf8-repair",
         dex.provenance_ + ": invalid MUTF-8 replaced with U+FFFD");
  }
  if (!std::is_sorted(dex.strings_.begin(), dex.strings_.end())) {
    // some packers emit unsorted pools; keep going
    warn(warnings, "unsorted-string-pool",
         dex.provenance_ + ": string_ids not sorted per format rules");
  }

  // types
  dex.types_.reserve(h.type_ids_size);
  for (uint32_t i = 0; i < h.type_ids_size; ++i) {
    r.seek(h.type_ids_off + i * 4);
    dex.types_.push_back(dex.string_at(r.u32()));
  }

  // protos
  dex.protos_.reserve(h.proto_ids_size);
  for (uint32_t i = 0; i < h.proto_ids_size; ++i) {
    r.seek(h.proto_ids_off + i * 12);
    Prototype p;
    p.shorty = dex.string_at(r.u32());
    p.return_type = dex.type_at(r.u32());
    uint32_t params_off = r.u32();
    if (params_off != 0) {
      if (params_off >= n) {
        throw Error(ErrorCode::TruncatedSection, "type_list offset past EOF",
                    dex.provenance_, params_off);
      }
      r.seek(params_off);
      uint32_t count = r.u32();
      for (uint32_t j = 0; j < count; ++j) {
        p.parameters.push_back(dex.type_at(r.u16()));
      }
    }
    dex.protos_.push_back(std::move(p));
  }

  // fields
  dex.fields_.reserve(h.field_ids_size);
  for (uint32_t i = 0; i < h.field_ids_size; ++i) {
    r.seek(h.field_ids_off + i * 8);
    FieldRef f;
    f.class_descriptor = dex.type_at(r.u16());
    f.type = dex.type_at(r.u16());
    f.name = dex.string_at(r.u32());
    dex.fields_.push_back(std::move(f));
  }

  // methods
  dex.methods_.reserve(h.method_ids_size);
  for (uint32_t i = 0; i < h.method_ids_size; ++i) {
    r.seek(h.method_ids_off + i * 8);
    MethodRef m;
    m.class_descriptor = dex.type_at(r.u16());
    uint16_t proto_idx = r.u16();
    if (proto_idx >= dex.protos_.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "proto index out of range",
                  dex.provenance_);
    }
    m.proto = dex.protos_[proto_idx];
    m.name = dex.string_at(r.u32());
    dex.methods_.push_back(std::move(m));
  }

  // class defs + class data
  dex.classes_.reserve(h.class_defs_size);
  for (uint32_t i = 0; i < h.class_defs_size; ++i) {
    r.seek(h.class_defs_off + i * 32);
    ClassDef c;
    c.descriptor = dex.type_at(r.u32());
    c.access_flags = r.u32();
    uint32_t superclass_idx = r.u32();
    if (superclass_idx != kNoIndex) c.superclass = dex.type_at(superclass_idx);
    uint32_t interfaces_off = r.u32();
    r.u32();  // source_file_idx
    r.u32();  // annotations_off
    uint32_t class_data_off = r.u32();
    r.u32();  // static_values_off

    if (interfaces_off != 0) {
      if (interfaces_off >= n) {
        throw Error(ErrorCode::TruncatedSection, "interfaces offset past EOF",
                    dex.provenance_, interfaces_off);
      }
      r.seek(interfaces_off);
      uint32_t count = r.u32();
      for (uint32_t j = 0; j < count; ++j) {
        c.interfaces.push_back(dex.type_at(r.u16()));
      }
    }

    if (class_data_off != 0) {
      if (class_data_off >= n) {
        throw Error(ErrorCode::TruncatedSection, "class_data offset past EOF",
                    dex.provenance_, class_data_off);
      }
      r.seek(class_data_off);
      uint32_t static_fields = r.uleb128();
      uint32_t instance_fields = r.uleb128();
      uint32_t direct_methods = r.uleb128();
      uint32_t virtual_methods = r.uleb128();

      uint32_t field_idx = 0;
      for (uint32_t j = 0; j < static_fields + instance_fields; ++j) {
        if (j == static_fields) field_idx = 0;
        field_idx += r.uleb128();
        DefinedField f;
        f.field_idx = field_idx;
        f.access_flags = r.uleb128();
        if (f.field_idx >= dex.fields_.size()) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "class_data field index out of range", dex.provenance_);
        }
        c.fields.push_back(f);
      }
      uint32_t method_idx = 0;
      for (uint32_t j = 0; j < direct_methods + virtual_methods; ++j) {
        if (j == direct_methods) method_idx = 0;
        method_idx += r.uleb128();
        DefinedMethod m;
        m.method_idx = method_idx;
        m.access_flags = r.uleb128();
        m.code_off = r.uleb128();
        if (m.method_idx >= dex.methods_.size()) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "class_data method index out of range", dex.provenance_);
        }
        if (m.code_off != 0 && m.code_off >= n) {
          throw Error(ErrorCode::TruncatedSection, "code_item offset past EOF",
                      dex.provenance_, m.code_off);
        }
        c.methods.push_back(m);
      }
    }
    dex.classes_.push_back(std::move(c));
  }
  return dex;
}

MethodBody DexFile::decode_body(const DefinedMethod& method) const {
  if (!method.has_code()) {
    throw Error(ErrorCode::AbstractOrNative,
                methods_[method.method_idx].pretty() + " has no code item",
                provenance_);
  }
  ByteReader r(data_, ErrorCode::TruncatedSection, provenance_);
  r.seek(method.code_off);
  MethodBody body;
  body.registers_size = r.u16();
  body.ins_size = r.u16();
  body.outs_size = r.u16();
  r.u16();  // tries_size
  r.u32();  // debug_info_off
  body.insns_size = r.u32();

  auto raw = r.bytes(static_cast<size_t>(body.insns_size) * 2);
  std::vector<uint16_t> units(body.insns_size);
  for (uint32_t i = 0; i < body.insns_size; ++i) {
    units[i] = static_cast<uint16_t>(raw[i * 2] | (raw[i * 2 + 1] << 8));
  }
  body.instructions =
      decode_instructions(units, methods_[method.method_idx].pretty());

  // resolve indices eagerly so decoded output never carries a dangling index
  for (const auto& ins : body.instructions) {
    switch (ins.index_kind) {
      case IndexKind::String: string_at(ins.index); break;
      case IndexKind::Type: type_at(ins.index); break;
      case IndexKind::Field: field_at(ins.index); break;
      case IndexKind::Method: method_at(ins.index); break;
      default: break;
    }
  }
  return body;
}

const ClassDef* DexFile::find_class(const std::string& descriptor) const {
  for (const auto& c : classes_) {
    if (c.descriptor == descriptor) return &c;
  }
  return nullptr;
}

const DefinedMethod* DexFile::find_method(
    const ClassDef& cls, const std::string& name,
    const std::string& param_signature) const {
  for (const auto& m : cls.methods) {
    const MethodRef& ref = methods_[m.method_idx];
    if (ref.name != name) continue;
    if (!param_signature.empty() &&
        ref.proto.param_signature() != param_signature) {
      continue;
    }
    return &m;
  }
  return nullptr;
}

MethodBody DexFile::decode_method(const std::string& class_descriptor,
                                  const std::string& method_name) const {
  const ClassDef* cls = find_class(class_descriptor);
  if (cls == nullptr) {
    throw Error(ErrorCode::MethodNotFound,
                "class " + class_descriptor + " not defined", provenance_);
  }
  const DefinedMethod* m = find_method(*cls, method_name, {});
  if (m == nullptr) {
    throw Error(ErrorCode::MethodNotFound,
                class_descriptor + "->" + method_name + " not defined",
                provenance_);
  }
  return decode_body(*m);
}

std::vector<Invocation> all_invocations(const DexFile& dex) {
  std::vector<Invocation> out;
  for (size_t ci = 0; ci < dex.classes().size(); ++ci) {
    const ClassDef& cls = dex.classes()[ci];
    for (size_t mi = 0; mi < cls.methods.size(); ++mi) {
      const DefinedMethod& m = cls.methods[mi];
      if (!m.has_code()) continue;
      MethodBody body = dex.decode_body(m);
      for (const auto& ins : body.instructions) {
        if (!ins.is_invoke()) continue;
        out.push_back({ci, mi, ins.index, ins.offset});
      }
    }
  }
  return out;
}

}  // namespace apkscan::dex
