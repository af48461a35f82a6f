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

#include "dex/instruction.hpp"

#include <set>
#include <string>

namespace apkscan::dex {

Format format_of(uint8_t opcode) {
  switch (opcode) {
    case 0x00: return Format::F10x;
    case 0x01: return Format::F12x;
    case 0x02: return Format::F22x;
    case 0x03: return Format::F32x;
    case 0x04: return Format::F12x;
    case 0x05: return Format::F22x;
    case 0x06: return Format::F32x;
    case 0x07: return Format::F12x;
    case 0x08: return Format::F22x;
    case 0x09: return Format::F32x;
    case 0x0a: case 0x0b: case 0x0c: case 0x0d: return Format::F11x;
    case 0x0e: return Format::F10x;
    case 0x0f: case 0x10: case 0x11: return Format::F11x;
    case 0x12: return Format::F11n;
    case 0x13: return Format::F21s;
    case 0x14: return Format::F31i;
    case 0x15: return Format::F21h;
    case 0x16: return Format::F21s;
    case 0x17: return Format::F31i;
    case 0x18: return Format::F51l;
    case 0x19: return Format::F21h;
    case 0x1a: return Format::F21c;
    case 0x1b: return Format::F31c;
    case 0x1c: return Format::F21c;
    case 0x1d: case 0x1e: return Format::F11x;
    case 0x1f: return Format::F21c;
    case 0x20: return Format::F22c;
    case 0x21: return Format::F12x;
    case 0x22: return Format::F21c;
    case 0x23: return Format::F22c;
    case 0x24: return Format::F35c;
    case 0x25: return Format::F3rc;
    case 0x26: return Format::F31t;
    case 0x27: return Format::F11x;
    case 0x28: return Format::F10t;
    case 0x29: return Format::F20t;
    case 0x2a: return Format::F30t;
    case 0x2b: case 0x2c: return Format::F31t;
    case 0x2d: case 0x2e: case 0x2f: case 0x30: case 0x31: return Format::F23x;
    case 0x32: case 0x33: case 0x34: case 0x35: case 0x36: case 0x37:
      return Format::F22t;
    case 0x38: case 0x39: case 0x3a: case 0x3b: case 0x3c: case 0x3d:
      return Format::F21t;
    case 0xfa: return Format::F45cc;
    case 0xfb: return Format::F4rcc;
    case 0xfc: return Format::F35c;
    case 0xfd: return Format::F3rc;
    case 0xfe: case 0xff: return Format::F21c;
    default: break;
  }
  if (opcode >= 0x44 && opcode <= 0x51) return Format::F23x;   // aget/aput
  if (opcode >= 0x52 && opcode <= 0x5f) return Format::F22c;   // iget/iput
  if (opcode >= 0x60 && opcode <= 0x6d) return Format::F21c;   // sget/sput
  if (opcode >= 0x6e && opcode <= 0x72) return Format::F35c;   // invoke
  if (opcode >= 0x74 && opcode <= 0x78) return Format::F3rc;   // invoke/range
  if (opcode >= 0x7b && opcode <= 0x8f) return Format::F12x;   // unop
  if (opcode >= 0x90 && opcode <= 0xaf) return Format::F23x;   // binop
  if (opcode >= 0xb0 && opcode <= 0xcf) return Format::F12x;   // binop/2addr
  if (opcode >= 0xd0 && opcode <= 0xd7) return Format::F22s;   // binop/lit16
  if (opcode >= 0xd8 && opcode <= 0xe2) return Format::F22b;   // binop/lit8
  // unused slots (0x3e-0x43, 0x73, 0x79, 0x7a, 0xe3-0xf9) decode as one unit
  return Format::F10x;
}

IndexKind index_kind_of(uint8_t opcode) {
  switch (opcode) {
    case 0x1a: case 0x1b: return IndexKind::String;
    case 0x1c: case 0x1f: case 0x20: case 0x22: case 0x23: case 0x24:
    case 0x25: return IndexKind::Type;
    case 0xfc: case 0xfd: return IndexKind::CallSite;
    case 0xfe: return IndexKind::MethodHandle;
    case 0xff: return IndexKind::Proto;
    default: break;
  }
  if (opcode >= 0x52 && opcode <= 0x6d) return IndexKind::Field;
  if ((opcode >= 0x6e && opcode <= 0x72) || (opcode >= 0x74 && opcode <= 0x78) ||
      opcode == 0xfa || opcode == 0xfb) {
    return IndexKind::Method;
  }
  return IndexKind::None;
}

int format_width(Format f) {
  switch (f) {
    case Format::F10x: case Format::F12x: case Format::F11n:
    case Format::F11x: case Format::F10t:
      return 1;
    case Format::F20t: case Format::F22x: case Format::F21t:
    case Format::F21s: case Format::F21h: case Format::F21c:
    case Format::F23x: case Format::F22b: case Format::F22t:
    case Format::F22s: case Format::F22c:
      return 2;
    case Format::F32x: case Format::F30t: case Format::F31t:
    case Format::F31i: case Format::F31c: case Format::F35c:
    case Format::F3rc:
      return 3;
    case Format::F45cc: case Format::F4rcc:
      return 4;
    case Format::F51l:
      return 5;
  }
  return 1;
}

namespace {

[[noreturn]] void malformed(const std::string& context, const std::string& what,
                            uint32_t offset) {
  throw Error(ErrorCode::MalformedCode, context + ": " + what, {}, offset);
}

int16_t as_s16(uint16_t v) { return static_cast<int16_t>(v); }

// Payload pseudo-instruction widths in code units.
uint32_t payload_width(std::span<const uint16_t> units, size_t pos,
                       const std::string& context) {
  uint16_t ident = units[pos];
  auto need = [&](size_t n) {
    if (pos + n > units.size()) {
      malformed(context, "payload runs past end of code", static_cast<uint32_t>(pos));
    }
  };
  if (ident == 0x0100) {  // packed-switch-payload
    need(2);
    uint32_t size = units[pos + 1];
    uint32_t w = size * 2 + 4;
    need(w);
    return w;
  }
  if (ident == 0x0200) {  // sparse-switch-payload
    need(2);
    uint32_t size = units[pos + 1];
    uint32_t w = size * 4 + 2;
    need(w);
    return w;
  }
  // fill-array-data-payload (0x0300)
  need(4);
  uint32_t element_width = units[pos + 1];
  uint32_t size = static_cast<uint32_t>(units[pos + 2]) |
                  (static_cast<uint32_t>(units[pos + 3]) << 16);
  uint64_t data_bytes = static_cast<uint64_t>(size) * element_width;
  uint32_t w = static_cast<uint32_t>((data_bytes + 1) / 2 + 4);
  need(w);
  return w;
}

}  // namespace

std::vector<Instruction> decode_instructions(std::span<const uint16_t> units,
                                             const std::string& context) {
  std::vector<Instruction> out;
  std::set<uint32_t> starts;
  size_t pos = 0;
  while (pos < units.size()) {
    uint16_t unit = units[pos];
    uint8_t opcode = static_cast<uint8_t>(unit & 0xff);
    uint8_t high = static_cast<uint8_t>(unit >> 8);

    Instruction ins;
    ins.offset = static_cast<uint32_t>(pos);
    starts.insert(ins.offset);

    if (opcode == op::kNop && (high == 0x01 || high == 0x02 || high == 0x03)) {
      ins.opcode = op::kNop;
      ins.is_payload = true;
      ins.width = payload_width(units, pos, context);
      out.push_back(std::move(ins));
      pos += out.back().width;
      continue;
    }

    ins.opcode = opcode;
    ins.index_kind = index_kind_of(opcode);
    Format f = format_of(opcode);
    ins.width = static_cast<uint32_t>(format_width(f));
    if (pos + ins.width > units.size()) {
      malformed(context, "instruction runs past end of code", ins.offset);
    }
    auto u = [&](size_t i) { return units[pos + i]; };

    switch (f) {
      case Format::F10x:
        break;
      case Format::F12x:
        ins.regs = {static_cast<uint16_t>(high & 0xf),
                    static_cast<uint16_t>(high >> 4)};
        break;
      case Format::F11n:
        ins.regs = {static_cast<uint16_t>(high & 0xf)};
        ins.literal = static_cast<int64_t>(static_cast<int8_t>(high) >> 4);
        ins.has_literal = true;
        break;
      case Format::F11x:
        ins.regs = {high};
        break;
      case Format::F10t:
        ins.branch_target =
            static_cast<int32_t>(pos) + static_cast<int8_t>(high);
        break;
      case Format::F20t:
        ins.branch_target = static_cast<int32_t>(pos) + as_s16(u(1));
        break;
      case Format::F22x:
        ins.regs = {high, u(1)};
        break;
      case Format::F21t:
        ins.regs = {high};
        ins.branch_target = static_cast<int32_t>(pos) + as_s16(u(1));
        break;
      case Format::F21s:
        ins.regs = {high};
        ins.literal = as_s16(u(1));
        ins.has_literal = true;
        break;
      case Format::F21h:
        ins.regs = {high};
        // shifted literal; const/high16 shifts 16, const-wide/high16 shifts 48
        ins.literal = opcode == 0x19
                          ? static_cast<int64_t>(as_s16(u(1))) << 48
                          : static_cast<int64_t>(as_s16(u(1))) << 16;
        ins.has_literal = true;
        break;
      case Format::F21c:
        ins.regs = {high};
        ins.index = u(1);
        break;
      case Format::F23x:
        ins.regs = {high, static_cast<uint16_t>(u(1) & 0xff),
                    static_cast<uint16_t>(u(1) >> 8)};
        break;
      case Format::F22b:
        ins.regs = {high, static_cast<uint16_t>(u(1) & 0xff)};
        ins.literal = static_cast<int8_t>(u(1) >> 8);
        ins.has_literal = true;
        break;
      case Format::F22t:
        ins.regs = {static_cast<uint16_t>(high & 0xf),
                    static_cast<uint16_t>(high >> 4)};
        ins.branch_target = static_cast<int32_t>(pos) + as_s16(u(1));
        break;
      case Format::F22s:
        ins.regs = {static_cast<uint16_t>(high & 0xf),
                    static_cast<uint16_t>(high >> 4)};
        ins.literal = as_s16(u(1));
        ins.has_literal = true;
        break;
      case Format::F22c:
        ins.regs = {static_cast<uint16_t>(high & 0xf),
                    static_cast<uint16_t>(high >> 4)};
        ins.index = u(1);
        break;
      case Format::F32x:
        ins.regs = {u(1), u(2)};
        break;
      case Format::F30t:
        ins.branch_target =
            static_cast<int32_t>(pos) +
            static_cast<int32_t>(u(1) | (static_cast<uint32_t>(u(2)) << 16));
        break;
      case Format::F31t:
        ins.regs = {high};
        ins.branch_target =
            static_cast<int32_t>(pos) +
            static_cast<int32_t>(u(1) | (static_cast<uint32_t>(u(2)) << 16));
        break;
      case Format::F31i:
        ins.regs = {high};
        ins.literal = static_cast<int32_t>(
            u(1) | (static_cast<uint32_t>(u(2)) << 16));
        ins.has_literal = true;
        break;
      case Format::F31c:
        ins.regs = {high};
        ins.index = u(1) | (static_cast<uint32_t>(u(2)) << 16);
        break;
      case Format::F35c: {
        uint8_t count = high >> 4;
        if (count > 5) malformed(context, "35c argument count > 5", ins.offset);
        ins.index = u(1);
        uint16_t nibbles = u(2);
        uint16_t all[5] = {
            static_cast<uint16_t>(nibbles & 0xf),
            static_cast<uint16_t>((nibbles >> 4) & 0xf),
            static_cast<uint16_t>((nibbles >> 8) & 0xf),
            static_cast<uint16_t>((nibbles >> 12) & 0xf),
            static_cast<uint16_t>(high & 0xf),
        };
        ins.regs.assign(all, all + count);
        break;
      }
      case Format::F3rc: {
        uint8_t count = high;
        ins.index = u(1);
        uint16_t first = u(2);
        ins.regs.reserve(count);
        for (uint8_t i = 0; i < count; ++i) {
          ins.regs.push_back(static_cast<uint16_t>(first + i));
        }
        break;
      }
      case Format::F45cc: {
        uint8_t count = high >> 4;
        if (count > 5) malformed(context, "45cc argument count > 5", ins.offset);
        ins.index = u(1);
        uint16_t nibbles = u(2);
        uint16_t all[5] = {
            static_cast<uint16_t>(nibbles & 0xf),
            static_cast<uint16_t>((nibbles >> 4) & 0xf),
            static_cast<uint16_t>((nibbles >> 8) & 0xf),
            static_cast<uint16_t>((nibbles >> 12) & 0xf),
            static_cast<uint16_t>(high & 0xf),
        };
        ins.regs.assign(all, all + count);
        // u(3) carries the proto index; kept as literal for completeness
        ins.literal = u(3);
        ins.has_literal = true;
        break;
      }
      case Format::F4rcc: {
        uint8_t count = high;
        ins.index = u(1);
        uint16_t first = u(2);
        for (uint8_t i = 0; i < count; ++i) {
          ins.regs.push_back(static_cast<uint16_t>(first + i));
        }
        ins.literal = u(3);
        ins.has_literal = true;
        break;
      }
      case Format::F51l: {
        ins.regs = {high};
        uint64_t v = static_cast<uint64_t>(u(1)) |
                     (static_cast<uint64_t>(u(2)) << 16) |
                     (static_cast<uint64_t>(u(3)) << 32) |
                     (static_cast<uint64_t>(u(4)) << 48);
        ins.literal = static_cast<int64_t>(v);
        ins.has_literal = true;
        break;
      }
    }
    pos += ins.width;
    out.push_back(std::move(ins));
  }

  if (pos != units.size()) {
    malformed(context, "instruction stream overruns code-unit count",
              static_cast<uint32_t>(units.size()));
  }
  // every branch target must land on a decoded instruction boundary
  for (const auto& ins : out) {
    if (ins.branch_target >= 0 && !ins.is_payload) {
      if (starts.find(static_cast<uint32_t>(ins.branch_target)) == starts.end()) {
        malformed(context, "branch target not on an instruction boundary",
                  ins.offset);
      }
    }
  }
  return out;
}

}  // namespace apkscan::dex
