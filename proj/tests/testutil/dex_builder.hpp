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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace apkscan::testutil {

// access flags
constexpr uint32_t kAccPublic = 0x0001;
constexpr uint32_t kAccPrivate = 0x0002;
constexpr uint32_t kAccStatic = 0x0008;
constexpr uint32_t kAccInterface = 0x0200;
constexpr uint32_t kAccAbstract = 0x0400;
constexpr uint32_t kAccConstructor = 0x10000;

struct MethodSym {
  std::string class_desc;
  std::string name;
  std::vector<std::string> params;
  std::string ret;

  auto operator<=>(const MethodSym&) const = default;
};

struct FieldSym {
  std::string class_desc;
  std::string type;
  std::string name;

  auto operator<=>(const FieldSym&) const = default;
};

// A tiny DEX assembler for building bytecode fixtures.  It shares no code
// with the parser under test; sections are laid out directly from the format
// description and the resulting symbol tables double as the test oracle.
class DexBuilder {
 public:
  class MethodAsm {
   public:
    using Label = int;

    // literals
    MethodAsm& const4(uint16_t reg, int32_t value);
    MethodAsm& const16(uint16_t reg, int16_t value);
    MethodAsm& const32(uint16_t reg, int32_t value);
    MethodAsm& const_wide16(uint16_t reg, int16_t value);
    MethodAsm& const_string(uint16_t reg, const std::string& value);
    MethodAsm& const_class(uint16_t reg, const std::string& type_desc);
    // moves
    MethodAsm& move(uint16_t dst, uint16_t src);
    MethodAsm& move_object(uint16_t dst, uint16_t src);
    MethodAsm& move_wide(uint16_t dst, uint16_t src);
    MethodAsm& move_result(uint16_t reg);
    MethodAsm& move_result_wide(uint16_t reg);
    MethodAsm& move_result_object(uint16_t reg);
    MethodAsm& move_exception(uint16_t reg);
    // calls
    MethodAsm& invoke(uint8_t opcode, const MethodSym& target,
                      const std::vector<uint16_t>& args);
    MethodAsm& invoke_range(uint8_t opcode, const MethodSym& target,
                            uint16_t first_reg, uint8_t count);
    // fields
    MethodAsm& iget_object(uint16_t dst, uint16_t obj, const FieldSym& field);
    MethodAsm& iput_object(uint16_t src, uint16_t obj, const FieldSym& field);
    MethodAsm& sget_object(uint16_t dst, const FieldSym& field);
    MethodAsm& sput_object(uint16_t src, const FieldSym& field);
    // objects and arrays
    MethodAsm& new_instance(uint16_t reg, const std::string& type_desc);
    MethodAsm& new_array(uint16_t dst, uint16_t size_reg,
                         const std::string& type_desc);
    MethodAsm& fill_array_data(uint16_t array_reg, uint16_t element_width,
                               const std::vector<uint8_t>& data);
    MethodAsm& aget(uint16_t dst, uint16_t array, uint16_t index);
    MethodAsm& aput(uint16_t src, uint16_t array, uint16_t index);
    MethodAsm& check_cast(uint16_t reg, const std::string& type_desc);
    // arithmetic (add-int as the representative binop)
    MethodAsm& add_int(uint16_t dst, uint16_t a, uint16_t b);
    MethodAsm& int_to_long(uint16_t dst, uint16_t src);
    // control flow
    Label make_label();
    MethodAsm& bind(Label label);
    MethodAsm& goto_(Label label);
    MethodAsm& if_eqz(uint16_t reg, Label label);
    MethodAsm& if_eq(uint16_t a, uint16_t b, Label label);
    MethodAsm& packed_switch(uint16_t reg, int32_t first_key,
                             const std::vector<Label>& targets);
    // returns
    MethodAsm& return_void();
    MethodAsm& return_value(uint16_t reg);
    MethodAsm& return_object(uint16_t reg);
    MethodAsm& return_wide(uint16_t reg);
    MethodAsm& throw_(uint16_t reg);
    MethodAsm& nop();

   private:
    friend class DexBuilder;
    struct Ins {
      uint8_t opcode = 0;
      std::vector<uint16_t> regs;
      int64_t literal = 0;
      std::string str;        // const-string payload
      std::string type_desc;  // type-indexed ops
      MethodSym method;
      FieldSym field;
      bool has_method = false;
      bool has_field = false;
      bool has_type = false;
      bool has_string = false;
      bool is_range = false;
      int label = -1;               // branch target label
      int bound_label = -1;         // label bound at this position
      std::vector<int> switch_labels;
      int32_t switch_first_key = 0;
      uint16_t payload_element_width = 0;
      std::vector<uint8_t> payload_data;
    };
    std::vector<Ins> code_;
    int next_label_ = 0;
  };

  struct MethodDef {
    MethodSym sym;
    uint32_t access_flags = kAccPublic;
    bool has_code = false;
    uint16_t registers = 0;
    MethodAsm body;
  };

  class ClassAsm {
   public:
    ClassAsm& field(const std::string& name, const std::string& type_desc,
                    uint32_t access_flags = kAccPrivate);
    // registers counts the full frame; parameters occupy the top registers
    MethodAsm& method(const std::string& name,
                      const std::vector<std::string>& params,
                      const std::string& ret, uint32_t access_flags,
                      uint16_t registers);
    MethodAsm& abstract_method(const std::string& name,
                               const std::vector<std::string>& params,
                               const std::string& ret);

   private:
    friend class DexBuilder;
    std::string descriptor_;
    std::string superclass_ = "Ljava/lang/Object;";
    std::vector<std::string> interfaces_;
    uint32_t access_flags_ = kAccPublic;
    std::vector<std::pair<FieldSym, uint32_t>> fields_;
    std::vector<MethodDef> methods_;
  };

  ClassAsm& add_class(const std::string& descriptor,
                      const std::string& superclass = "Ljava/lang/Object;",
                      uint32_t access_flags = kAccPublic,
                      const std::vector<std::string>& interfaces = {});

  // Adds a pool-only string (never referenced from code).
  void add_string(const std::string& s) { extra_strings_.push_back(s); }

  std::vector<uint8_t> build();

  // Symbol listing captured by the last build(): the oracle the parser's
  // tables are compared against.
  struct Listing {
    std::vector<std::string> strings;  // sorted as emitted
    std::vector<std::string> types;
    std::vector<std::pair<MethodSym, uint32_t>> methods;  // sym -> index
    std::vector<FieldSym> fields;
    size_t invoke_site_count = 0;
  };
  const Listing& listing() const { return listing_; }

 private:
  static uint32_t ins_width_of(const MethodAsm::Ins& ins);

  std::vector<std::unique_ptr<ClassAsm>> classes_;
  std::vector<std::string> extra_strings_;
  Listing listing_;
};

}  // namespace apkscan::testutil
