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

#include "dex/instruction.hpp"
#include "support/error.hpp"

namespace apkscan::dex {

// access_flags bits used by the analysis
constexpr uint32_t kAccNative = 0x0100;
constexpr uint32_t kAccAbstract = 0x0400;

struct Prototype {
  std::string shorty;
  std::string return_type;
  std::vector<std::string> parameters;

  // "(Ljava/lang/String;I)V" style signature
  std::string signature() const;
  // parameter part only: "(Ljava/lang/String;I)"
  std::string param_signature() const;

  bool operator==(const Prototype&) const = default;
};

struct MethodRef {
  std::string class_descriptor;
  std::string name;
  Prototype proto;

  std::string pretty() const { return class_descriptor + "->" + name; }
  bool operator==(const MethodRef&) const = default;
};

struct FieldRef {
  std::string class_descriptor;
  std::string type;
  std::string name;

  std::string key() const { return class_descriptor + "->" + name + ":" + type; }
  bool operator==(const FieldRef&) const = default;
};

struct DefinedMethod {
  uint32_t method_idx = 0;   // into the method_ids table
  uint32_t access_flags = 0;
  uint32_t code_off = 0;     // 0 when abstract or native

  bool has_code() const { return code_off != 0; }
};

struct DefinedField {
  uint32_t field_idx = 0;
  uint32_t access_flags = 0;
};

struct ClassDef {
  std::string descriptor;
  std::string superclass;    // empty for Ljava/lang/Object;
  std::vector<std::string> interfaces;
  uint32_t access_flags = 0;
  std::vector<DefinedField> fields;    // static then instance, declared order
  std::vector<DefinedMethod> methods;  // direct then virtual, declared order
};

struct MethodBody {
  uint16_t registers_size = 0;
  uint16_t ins_size = 0;
  uint16_t outs_size = 0;
  uint32_t insns_size = 0;  // code units
  std::vector<Instruction> instructions;
};

class DexFile {
 public:
  static DexFile parse(std::vector<uint8_t> data, std::string provenance,
                       WarningList* warnings = nullptr);

  const std::string& provenance() const { return provenance_; }
  const std::vector<std::string>& strings() const { return strings_; }
  const std::vector<std::string>& types() const { return types_; }
  const std::vector<Prototype>& protos() const { return protos_; }
  const std::vector<FieldRef>& fields() const { return fields_; }
  const std::vector<MethodRef>& methods() const { return methods_; }
  const std::vector<ClassDef>& classes() const { return classes_; }

  const std::string& string_at(uint32_t idx) const;
  const MethodRef& method_at(uint32_t idx) const;
  const FieldRef& field_at(uint32_t idx) const;
  const std::string& type_at(uint32_t idx) const;

  // Decodes the code item at `code_off`.  Throws MalformedCode on decoding
  // faults and AbstractOrNative when code_off is 0.
  MethodBody decode_body(const DefinedMethod& method) const;

  // Spec-level convenience: looks a method up by class descriptor and name.
  // Throws MethodNotFound / AbstractOrNative.
  MethodBody decode_method(const std::string& class_descriptor,
                           const std::string& method_name) const;

  const ClassDef* find_class(const std::string& descriptor) const;
  const DefinedMethod* find_method(const ClassDef& cls, const std::string& name,
                                   const std::string& param_signature) const;

 private:
  std::string provenance_;
  std::vector<uint8_t> data_;
  std::vector<std::string> strings_;
  std::vector<std::string> types_;
  std::vector<Prototype> protos_;
  std::vector<FieldRef> fields_;
  std::vector<MethodRef> methods_;
  std::vector<ClassDef> classes_;
};

// One invoke-kind call site.  Order: class declaration order, then method
// declaration order, then code offset.
struct Invocation {
  size_t class_index = 0;
  size_t method_index = 0;   // into ClassDef::methods
  uint32_t method_ref = 0;   // callee, into DexFile::methods()
  uint32_t offset = 0;       // code-unit offset of the invoke instruction
};

std::vector<Invocation> all_invocations(const DexFile& dex);

}  // namespace apkscan::dex
