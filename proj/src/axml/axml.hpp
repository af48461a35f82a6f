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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "support/error.hpp"

namespace apkscan::axml {

// Android binary XML (the compiled form of the manifest and layout files).
// Chunk types, little-endian throughout:
//   RES_STRING_POOL_TYPE      0x0001
//   RES_XML_TYPE              0x0003 (outer document chunk)
//   RES_XML_START_NAMESPACE   0x0100 / END 0x0101
//   RES_XML_START_ELEMENT     0x0102 / END 0x0103
//   RES_XML_CDATA             0x0104
//   RES_XML_RESOURCE_MAP_TYPE 0x0180
constexpr uint16_t kResStringPool = 0x0001;
constexpr uint16_t kResXml = 0x0003;
constexpr uint16_t kResXmlStartNamespace = 0x0100;
constexpr uint16_t kResXmlEndNamespace = 0x0101;
constexpr uint16_t kResXmlStartElement = 0x0102;
constexpr uint16_t kResXmlEndElement = 0x0103;
constexpr uint16_t kResXmlCdata = 0x0104;
constexpr uint16_t kResXmlResourceMap = 0x0180;

// Typed attribute values (Res_value.dataType).
enum class ValueType : uint8_t {
  Null = 0x00,
  Reference = 0x01,
  Attribute = 0x02,
  String = 0x03,
  Float = 0x04,
  IntDec = 0x10,
  IntHex = 0x11,
  IntBoolean = 0x12,
};

struct TypedValue {
  ValueType type = ValueType::Null;
  uint32_t data = 0;          // raw payload
  std::string string_value;   // resolved when type == String

  bool operator==(const TypedValue&) const = default;

  bool as_bool() const { return data != 0; }
  int32_t as_int() const { return static_cast<int32_t>(data); }
};

struct XmlAttribute {
  std::string ns;       // namespace URI, empty when unqualified
  std::string name;     // may be empty in obfuscated pools; see resource_id
  uint32_t resource_id = 0;  // 0 when the attribute has no resource-map slot
  TypedValue value;
  std::string raw_value;     // the original string form when the pool kept it
  bool has_raw = false;

  bool operator==(const XmlAttribute&) const = default;
};

struct XmlElement {
  std::string ns;
  std::string name;
  std::vector<XmlAttribute> attributes;
  std::vector<XmlElement> children;

  bool operator==(const XmlElement&) const = default;

  const XmlAttribute* attribute(uint32_t resource_id,
                                const std::string& fallback_name) const;
  const XmlAttribute* attribute_named(const std::string& name) const;
};

struct XmlDocument {
  std::vector<std::string> string_pool;
  std::vector<uint32_t> resource_ids;
  XmlElement root;
};

XmlDocument parse_axml(std::span<const uint8_t> data);

}  // namespace apkscan::axml
