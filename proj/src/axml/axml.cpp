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

#include "axml/axml.hpp"

#include "support/bytes.hpp"

namespace apkscan::axml {

namespace {

constexpr uint32_t kNoEntry = 0xffffffffu;

struct ChunkHeader {
  uint16_t type;
  uint16_t header_size;
  uint32_t size;
};

ChunkHeader read_chunk_header(ByteReader& r) {
  ChunkHeader h{};
  h.type = r.u16();
  h.header_size = r.u16();
  h.size = r.u32();
  return h;
}

void append_utf8(std::string& out, uint32_t cp) {
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

class Parser {
 public:
  explicit Parser(std::span<const uint8_t> data)
      : data_(data), reader_(data, ErrorCode::TruncatedChunk) {}

  XmlDocument parse() {
    if (data_.size() < 8) {
      throw Error(ErrorCode::BadMagic, "buffer too small for an AXML document");
    }
    ChunkHeader doc = read_chunk_header(reader_);
    if (doc.type != kResXml) {
      throw Error(ErrorCode::BadMagic, "not a binary XML document");
    }
    if (doc.size > data_.size()) {
      throw Error(ErrorCode::TruncatedChunk,
                  "document chunk length exceeds buffer", {}, 0);
    }

    std::vector<XmlElement*> stack;
    XmlDocument out;
    bool have_root = false;

    while (reader_.pos() + 8 <= doc.size) {
      size_t chunk_start = reader_.pos();
      ChunkHeader h = read_chunk_header(reader_);
      if (h.size < 8 || chunk_start + h.size > doc.size) {
        throw Error(ErrorCode::TruncatedChunk,
                    "chunk length exceeds document", {}, chunk_start);
      }
      switch (h.type) {
        case kResStringPool:
          parse_string_pool(chunk_start, out);
          break;
        case kResXmlResourceMap:
          parse_resource_map(h, out);
          break;
        case kResXmlStartNamespace: {
          reader_.u32();  // line
          reader_.u32();  // comment
          uint32_t prefix = reader_.u32();
          uint32_t uri = reader_.u32();
          namespaces_.emplace_back(prefix, uri);
          break;
        }
        case kResXmlEndNamespace:
          if (!namespaces_.empty()) namespaces_.pop_back();
          reader_.u32();
          reader_.u32();
          reader_.u32();
          reader_.u32();
          break;
        case kResXmlStartElement: {
          XmlElement elem = parse_start_element(out);
          if (stack.empty()) {
            if (have_root) {
              throw Error(ErrorCode::UnbalancedElements,
                          "multiple root elements");
            }
            out.root = std::move(elem);
            stack.push_back(&out.root);
            have_root = true;
          } else {
            stack.back()->children.push_back(std::move(elem));
            stack.push_back(&stack.back()->children.back());
          }
          break;
        }
        case kResXmlEndElement: {
          reader_.u32();  // line
          reader_.u32();  // comment
          reader_.u32();  // ns
          uint32_t name = reader_.u32();
          if (stack.empty()) {
            throw Error(ErrorCode::UnbalancedElements,
                        "end element without matching start", {}, chunk_start);
          }
          if (stack.back()->name != pool_string(name, out)) {
            throw Error(ErrorCode::UnbalancedElements,
                        "end element name does not match start", {},
                        chunk_start);
          }
          stack.pop_back();
          break;
        }
        case kResXmlCdata:
          // text nodes are not used by the manifest or widget extraction
          break;
        default:
          break;  // unknown chunk, skipped by size below
      }
      reader_.seek(chunk_start + h.size);
    }

    if (!have_root) {
      throw Error(ErrorCode::UnbalancedElements, "document has no root element");
    }
    if (!stack.empty()) {
      throw Error(ErrorCode::UnbalancedElements,
                  "unterminated elements at end of document");
    }
    return out;
  }

 private:
  std::string pool_string(uint32_t index, const XmlDocument& doc) const {
    if (index == kNoEntry) return {};
    if (index >= doc.string_pool.size()) {
      throw Error(ErrorCode::StringIndexOutOfRange,
                  "string index " + std::to_string(index) + " out of range");
    }
    return doc.string_pool[index];
  }

  void parse_string_pool(size_t chunk_start, XmlDocument& out) {
    uint32_t string_count = reader_.u32();
    uint32_t style_count = reader_.u32();
    uint32_t flags = reader_.u32();
    bool utf8 = (flags & (1u << 8)) != 0;
    uint32_t strings_start = reader_.u32();
    reader_.u32();  // styles_start

    std::vector<uint32_t> offsets(string_count);
    for (auto& off : offsets) off = reader_.u32();
    // style entries (if any) are skipped; manifest/layout pools carry none
    (void)style_count;

    out.string_pool.clear();
    out.string_pool.reserve(string_count);
    for (uint32_t off : offsets) {
      reader_.seek(chunk_start + strings_start + off);
      out.string_pool.push_back(utf8 ? read_utf8_string()
                                     : read_utf16_string());
    }
  }

  std::string read_utf8_string() {
    // u8 UTF-16 length (possibly 2 bytes), u8 byte length (possibly 2 bytes),
    // then the bytes.
    uint32_t u16len = reader_.u8();
    if (u16len & 0x80) {
      u16len = ((u16len & 0x7f) << 8) | reader_.u8();
    }
    uint32_t bytelen = reader_.u8();
    if (bytelen & 0x80) {
      bytelen = ((bytelen & 0x7f) << 8) | reader_.u8();
    }
    auto bytes = reader_.bytes(bytelen);
    return std::string(bytes.begin(), bytes.end());
  }

  std::string read_utf16_string() {
    uint32_t len = reader_.u16();
    if (len & 0x8000) {
      len = ((len & 0x7fff) << 16) | reader_.u16();
    }
    std::string out;
    out.reserve(len);
    for (uint32_t i = 0; i < len; ++i) {
      uint32_t unit = reader_.u16();
      if (unit >= 0xD800 && unit <= 0xDBFF && i + 1 < len) {
        uint32_t low = reader_.u16();
        ++i;
        if (low >= 0xDC00 && low <= 0xDFFF) {
          uint32_t cp = 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00);
          append_utf8(out, cp);
          continue;
        }
        append_utf8(out, 0xFFFD);
        append_utf8(out, low);
        continue;
      }
      append_utf8(out, unit);
    }
    return out;
  }

  void parse_resource_map(const ChunkHeader& h, XmlDocument& out) {
    uint32_t count = (h.size - h.header_size) / 4;
    out.resource_ids.clear();
    out.resource_ids.reserve(count);
    for (uint32_t i = 0; i < count; ++i) out.resource_ids.push_back(reader_.u32());
  }

  XmlElement parse_start_element(const XmlDocument& doc) {
    reader_.u32();  // line
    reader_.u32();  // comment
    uint32_t ns = reader_.u32();
    uint32_t name = reader_.u32();
    reader_.u16();  // attribute start
    reader_.u16();  // attribute size
    uint16_t attr_count = reader_.u16();
    reader_.u16();  // id index
    reader_.u16();  // class index
    reader_.u16();  // style index

    XmlElement elem;
    elem.ns = pool_string(ns, doc);
    elem.name = pool_string(name, doc);
    elem.attributes.reserve(attr_count);
    for (uint16_t i = 0; i < attr_count; ++i) {
      XmlAttribute attr;
      uint32_t attr_ns = reader_.u32();
      uint32_t attr_name = reader_.u32();
      uint32_t raw = reader_.u32();
      reader_.u16();  // value size
      reader_.u8();   // res0
      uint8_t type = reader_.u8();
      uint32_t data = reader_.u32();

      attr.ns = pool_string(attr_ns, doc);
      attr.name = pool_string(attr_name, doc);
      // name indices below the resource-map length carry stable attribute ids
      if (attr_name != kNoEntry && attr_name < doc.resource_ids.size()) {
        attr.resource_id = doc.resource_ids[attr_name];
      }
      if (raw != kNoEntry) {
        attr.raw_value = pool_string(raw, doc);
        attr.has_raw = true;
      }
      attr.value.type = static_cast<ValueType>(type);
      attr.value.data = data;
      if (attr.value.type == ValueType::String) {
        attr.value.string_value = pool_string(data, doc);
        attr.value.data = 0;  // pool index is meaningless once resolved
      }
      elem.attributes.push_back(std::move(attr));
    }
    return elem;
  }

  std::span<const uint8_t> data_;
  ByteReader reader_;
  std::vector<std::pair<uint32_t, uint32_t>> namespaces_;
};

}  // namespace

const XmlAttribute* XmlElement::attribute(uint32_t resource_id,
                                          const std::string& fallback_name) const {
  for (const auto& a : attributes) {
    if (resource_id != 0 && a.resource_id == resource_id) return &a;
  }
  for (const auto& a : attributes) {
    if (!fallback_name.empty() && a.name == fallback_name) return &a;
  }
  return nullptr;
}

const XmlAttribute* XmlElement::attribute_named(const std::string& name) const {
  for (const auto& a : attributes) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

XmlDocument parse_axml(std::span<const uint8_t> data) {
  return Parser(data).parse();
}

}  // namespace apkscan::axml
