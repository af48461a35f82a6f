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
#include <span>
#include <vector>

#include "support/error.hpp"

namespace apkscan::dex {

// Dalvik opcodes used by name in the analysis layers.
namespace op {
constexpr uint8_t kNop = 0x00;
constexpr uint8_t kMoveResult = 0x0a;
constexpr uint8_t kMoveResultWide = 0x0b;
constexpr uint8_t kMoveResultObject = 0x0c;
constexpr uint8_t kMoveException = 0x0d;
constexpr uint8_t kReturnVoid = 0x0e;
constexpr uint8_t kReturn = 0x0f;
constexpr uint8_t kReturnWide = 0x10;
constexpr uint8_t kReturnObject = 0x11;
constexpr uint8_t kConstString = 0x1a;
constexpr uint8_t kConstStringJumbo = 0x1b;
constexpr uint8_t kConstClass = 0x1c;
constexpr uint8_t kNewInstance = 0x22;
constexpr uint8_t kNewArray = 0x23;
constexpr uint8_t kFilledNewArray = 0x24;
constexpr uint8_t kFilledNewArrayRange = 0x25;
constexpr uint8_t kFillArrayData = 0x26;
constexpr uint8_t kThrow = 0x27;
constexpr uint8_t kInvokeVirtual = 0x6e;
constexpr uint8_t kInvokeSuper = 0x6f;
constexpr uint8_t kInvokeDirect = 0x70;
constexpr uint8_t kInvokeStatic = 0x71;
constexpr uint8_t kInvokeInterface = 0x72;
constexpr uint8_t kInvokeVirtualRange = 0x74;
constexpr uint8_t kInvokeInterfaceRange = 0x78;
}  // namespace op

enum class Format : uint8_t {
  F10x, F12x, F11n, F11x, F10t, F20t, F22x, F21t, F21s, F21h, F21c, F23x,
  F22b, F22t, F22s, F22c, F32x, F30t, F31t, F31i, F31c, F35c, F3rc, F45cc,
  F4rcc, F51l,
};

enum class IndexKind : uint8_t {
  None, String, Type, Field, Method, CallSite, MethodHandle, Proto,
};

Format format_of(uint8_t opcode);
IndexKind index_kind_of(uint8_t opcode);
int format_width(Format f);

struct Instruction {
  uint8_t opcode = 0;
  uint32_t offset = 0;   // code-unit offset within the method
  uint32_t width = 0;    // code units including payload data
  std::vector<uint16_t> regs;  // operand order; invokes carry argument regs
  IndexKind index_kind = IndexKind::None;
  uint32_t index = 0;
  int64_t literal = 0;
  bool has_literal = false;
  int32_t branch_target = -1;  // absolute code-unit offset when >= 0
  bool is_payload = false;     // packed-switch/sparse-switch/fill-array data

  bool is_invoke() const {
    return (opcode >= op::kInvokeVirtual && opcode <= op::kInvokeInterface) ||
           (opcode >= op::kInvokeVirtualRange &&
            opcode <= op::kInvokeInterfaceRange);
  }
  bool is_invoke_range() const {
    return opcode >= op::kInvokeVirtualRange &&
           opcode <= op::kInvokeInterfaceRange;
  }
  bool is_move_result() const {
    return opcode >= op::kMoveResult && opcode <= op::kMoveResultObject;
  }
  bool is_move() const { return opcode >= 0x01 && opcode <= 0x09; }
  bool is_const_literal() const { return opcode >= 0x12 && opcode <= 0x19; }
  bool is_const_string() const {
    return opcode == op::kConstString || opcode == op::kConstStringJumbo;
  }
  bool is_return_value() const { return opcode >= 0x0f && opcode <= 0x11; }
  bool is_instance_get() const { return opcode >= 0x52 && opcode <= 0x58; }
  bool is_instance_put() const { return opcode >= 0x59 && opcode <= 0x5f; }
  bool is_static_get() const { return opcode >= 0x60 && opcode <= 0x66; }
  bool is_static_put() const { return opcode >= 0x67 && opcode <= 0x6d; }
  bool is_array_get() const { return opcode >= 0x44 && opcode <= 0x4a; }
  bool is_array_put() const { return opcode >= 0x4b && opcode <= 0x51; }
  bool is_unop() const { return opcode >= 0x7b && opcode <= 0x8f; }
  bool is_binop() const { return opcode >= 0x90 && opcode <= 0xaf; }
  bool is_binop_2addr() const { return opcode >= 0xb0 && opcode <= 0xcf; }
  bool is_binop_lit() const { return opcode >= 0xd0 && opcode <= 0xe2; }
  bool is_cmp() const { return opcode >= 0x2d && opcode <= 0x31; }
  bool is_branch() const {
    return (opcode >= 0x28 && opcode <= 0x2c) ||
           (opcode >= 0x32 && opcode <= 0x3d);
  }
};

// Decodes one method's code units.  `trailing payloads` (switch tables and
// array data) are decoded as opaque payload pseudo-instructions so that no
// byte is skipped silently; the sum of widths equals the code-unit count.
std::vector<Instruction> decode_instructions(std::span<const uint16_t> units,
                                             const std::string& context);

}  // namespace apkscan::dex
