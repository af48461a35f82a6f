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

#include <optional>
#include <string>
#include <vector>

#include "axml/axml.hpp"

namespace apkscan::axml {

// Stable android: attribute resource ids (public R.attr values).  Attribute
// identification prefers these over name strings: obfuscated string pools may
// drop attribute names, the ids survive.
namespace attr {
constexpr uint32_t kName = 0x01010003;
constexpr uint32_t kPermission = 0x01010006;
constexpr uint32_t kDebuggable = 0x0101000f;
constexpr uint32_t kExported = 0x01010010;
constexpr uint32_t kLaunchMode = 0x0101001d;
constexpr uint32_t kId = 0x010100d0;
constexpr uint32_t kText = 0x0101014f;
constexpr uint32_t kHint = 0x01010150;
constexpr uint32_t kAllowBackup = 0x0101027f;
constexpr uint32_t kUsesCleartextTraffic = 0x010104ec;
constexpr uint32_t kNetworkSecurityConfig = 0x01010527;
}  // namespace attr

enum class ComponentKind { Activity, Service, Receiver, Provider };
enum class LaunchMode { Standard, SingleTop, SingleTask, SingleInstance };

const char* component_kind_name(ComponentKind kind);
const char* launch_mode_name(LaunchMode mode);

struct Component {
  ComponentKind kind = ComponentKind::Activity;
  std::string name;
  std::optional<bool> exported;          // absent when the attribute is unset
  std::optional<std::string> permission;
  LaunchMode launch_mode = LaunchMode::Standard;
  int intent_filter_count = 0;

  bool operator==(const Component&) const = default;
};

struct ManifestModel {
  std::string package;
  std::vector<std::string> permissions;  // uses-permission names
  std::vector<Component> components;
  // tri-state application flags: explicitly set or absent (absent != false)
  std::optional<bool> allow_backup;
  std::optional<bool> debuggable;
  std::optional<bool> uses_cleartext_traffic;
  std::optional<uint32_t> network_security_config;

  bool operator==(const ManifestModel&) const = default;
};

// A text-bearing widget found in a layout file.  Dropped entirely when none
// of id_name/hint_text/text is present (nothing to match a keyword against).
struct WidgetDecl {
  std::string widget_class;              // element name, e.g. EditText
  std::optional<std::string> id_name;    // trailing segment of "@+id/..."
  std::optional<uint32_t> resource_id;   // typed reference value of android:id
  std::optional<std::string> hint_text;
  std::optional<std::string> text;
  std::string source_file;

  bool operator==(const WidgetDecl&) const = default;
};

ManifestModel extract_manifest(const XmlDocument& doc,
                               WarningList* warnings = nullptr);

// Default suffixes identify the input/text widget classes; custom subclasses
// whose names end in a suffix (FooEditText) match too.
std::vector<WidgetDecl> extract_layout_widgets(
    const XmlDocument& doc, const std::string& source_file,
    const std::vector<std::string>& widget_suffixes =
        {"EditText", "TextView", "AutoCompleteTextView"},
    WarningList* warnings = nullptr);

}  // namespace apkscan::axml
