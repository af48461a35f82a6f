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

#include "axml/manifest.hpp"

#include "support/text.hpp"

namespace apkscan::axml {

namespace {

std::optional<bool> read_bool(const XmlElement& elem, uint32_t resource_id,
                              const std::string& name) {
  const XmlAttribute* a = elem.attribute(resource_id, name);
  if (a == nullptr) return std::nullopt;
  if (a->value.type == ValueType::IntBoolean) return a->value.as_bool();
  if (a->value.type == ValueType::String) {
    return ascii_lower(a->value.string_value) == "true";
  }
  if (a->has_raw) return ascii_lower(a->raw_value) == "true";
  return a->value.data != 0;
}

std::optional<std::string> read_string(const XmlElement& elem,
                                       uint32_t resource_id,
                                       const std::string& name) {
  const XmlAttribute* a = elem.attribute(resource_id, name);
  if (a == nullptr) return std::nullopt;
  if (a->value.type == ValueType::String) return a->value.string_value;
  if (a->has_raw) return a->raw_value;
  return std::nullopt;
}

LaunchMode read_launch_mode(const XmlElement& elem) {
  const XmlAttribute* a = elem.attribute(attr::kLaunchMode, "launchMode");
  if (a == nullptr) return LaunchMode::Standard;
  int32_t v = -1;
  if (a->value.type == ValueType::IntDec || a->value.type == ValueType::IntHex) {
    v = a->value.as_int();
  } else if (a->value.type == ValueType::String || a->has_raw) {
    std::string s = ascii_lower(a->value.type == ValueType::String
                                    ? a->value.string_value
                                    : a->raw_value);
    if (s == "standard") return LaunchMode::Standard;
    if (s == "singletop") return LaunchMode::SingleTop;
    if (s == "singletask") return LaunchMode::SingleTask;
    if (s == "singleinstance") return LaunchMode::SingleInstance;
  }
  switch (v) {
    case 1: return LaunchMode::SingleTop;
    case 2: return LaunchMode::SingleTask;
    case 3: return LaunchMode::SingleInstance;
    default: return LaunchMode::Standard;
  }
}

std::optional<ComponentKind> component_kind_of(const std::string& element) {
  if (element == "activity") return ComponentKind::Activity;
  if (element == "service") return ComponentKind::Service;
  if (element == "receiver") return ComponentKind::Receiver;
  if (element == "provider") return ComponentKind::Provider;
  return std::nullopt;
}

}  // namespace

const char* component_kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Activity: return "activity";
    case ComponentKind::Service: return "service";
    case ComponentKind::Receiver: return "receiver";
    case ComponentKind::Provider: return "provider";
  }
  return "activity";
}

const char* launch_mode_name(LaunchMode mode) {
  switch (mode) {
    case LaunchMode::Standard: return "standard";
    case LaunchMode::SingleTop: return "singleTop";
    case LaunchMode::SingleTask: return "singleTask";
    case LaunchMode::SingleInstance: return "singleInstance";
  }
  return "standard";
}

ManifestModel extract_manifest(const XmlDocument& doc, WarningList* warnings) {
  if (doc.root.name != "manifest") {
    throw Error(ErrorCode::NotAManifest,
                "root element is '" + doc.root.name + "', expected 'manifest'");
  }
  ManifestModel m;
  if (const XmlAttribute* pkg = doc.root.attribute_named("package")) {
    if (pkg->value.type == ValueType::String) {
      m.package = pkg->value.string_value;
    } else if (pkg->has_raw) {
      m.package = pkg->raw_value;
    }
  }

  for (const auto& child : doc.root.children) {
    if (child.name == "uses-permission") {
      if (auto name = read_string(child, attr::kName, "name")) {
        m.permissions.push_back(*name);
      }
      continue;
    }
    if (child.name != "application") continue;

    m.allow_backup = read_bool(child, attr::kAllowBackup, "allowBackup");
    m.debuggable = read_bool(child, attr::kDebuggable, "debuggable");
    m.uses_cleartext_traffic =
        read_bool(child, attr::kUsesCleartextTraffic, "usesCleartextTraffic");
    if (const XmlAttribute* nsc = child.attribute(attr::kNetworkSecurityConfig,
                                                  "networkSecurityConfig")) {
      if (nsc->value.type == ValueType::Reference) {
        m.network_security_config = nsc->value.data;
      } else {
        m.network_security_config = 0;
        warn(warnings, "unresolved-reference",
             "networkSecurityConfig attribute is not a resource reference");
      }
    }

    for (const auto& app_child : child.children) {
      auto kind = component_kind_of(app_child.name);
      if (!kind) continue;
      Component c;
      c.kind = *kind;
      if (auto name = read_string(app_child, attr::kName, "name")) {
        c.name = *name;
      }
      c.exported = read_bool(app_child, attr::kExported, "exported");
      c.permission = read_string(app_child, attr::kPermission, "permission");
      c.launch_mode = read_launch_mode(app_child);
      for (const auto& sub : app_child.children) {
        if (sub.name == "intent-filter") ++c.intent_filter_count;
      }
      m.components.push_back(std::move(c));
    }
  }
  return m;
}

std::vector<WidgetDecl> extract_layout_widgets(
    const XmlDocument& doc, const std::string& source_file,
    const std::vector<std::string>& widget_suffixes, WarningList* warnings) {
  std::vector<WidgetDecl> out;

  auto visit = [&](const XmlElement& elem, auto&& self) -> void {
    bool is_widget = false;
    for (const auto& suffix : widget_suffixes) {
      if (ends_with(elem.name, suffix)) {
        is_widget = true;
        break;
      }
    }
    if (is_widget) {
      WidgetDecl w;
      w.widget_class = elem.name;
      w.source_file = source_file;
      if (const XmlAttribute* id = elem.attribute(attr::kId, "id")) {
        if (id->has_raw) {
          // "@+id/personal_details_name" -> "personal_details_name"
          size_t slash = id->raw_value.find_last_of('/');
          if (slash != std::string::npos && slash + 1 < id->raw_value.size()) {
            w.id_name = id->raw_value.substr(slash + 1);
          }
        }
        if (id->value.type == ValueType::Reference) {
          w.resource_id = id->value.data;
        }
      }
      auto read_text_attr = [&](uint32_t rid, const std::string& name)
          -> std::optional<std::string> {
        const XmlAttribute* a = elem.attribute(rid, name);
        if (a == nullptr) return std::nullopt;
        if (a->value.type == ValueType::String) return a->value.string_value;
        if (a->value.type == ValueType::Reference) {
          // @string/... indirection needs the resource table, which is not
          // decoded; recorded rather than guessed.
          warn(warnings, "unresolved-reference",
               source_file + ": " + elem.name + " " + name +
                   " references a string resource");
          return std::nullopt;
        }
        if (a->has_raw) return a->raw_value;
        return std::nullopt;
      };
      w.hint_text = read_text_attr(attr::kHint, "hint");
      w.text = read_text_attr(attr::kText, "text");

      if (w.id_name || w.hint_text || w.text) {
        out.push_back(std::move(w));
      }
    }
    for (const auto& child : elem.children) self(child, self);
  };
  visit(doc.root, visit);
  return out;
}

}  // namespace apkscan::axml
