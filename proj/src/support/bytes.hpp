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
#include <string>
#include <vector>

#include "support/error.hpp"

namespace apkscan {

// Bounds-checked little-endian cursor over a byte buffer.  Every overrun
// throws Error with the code the owning parser configured, so each format
// reports truncation under its own name.
class ByteReader {
 public:
  ByteReader(std::span<const uint8_t> data, ErrorCode truncation_code,
             std::string entry = {})
      : data_(data), trunc_(truncation_code), entry_(std::move(entry)) {}

  size_t pos() const { return pos_; }
  size_t size() const { return data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

  void seek(size_t pos) {
    if (pos > data_.size()) fail("seek past end", pos);
    pos_ = pos;
  }
  void skip(size_t n) {
    require(n);
    pos_ += n;
  }

  uint8_t u8() {
    require(1);
    return data_[pos_++];
  }
  uint16_t u16() {
    require(2);
    uint16_t v = static_cast<uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  uint32_t u32() {
    require(4);
    uint32_t v = static_cast<uint32_t>(data_[pos_]) |
                 (static_cast<uint32_t>(data_[pos_ + 1]) << 8) |
                 (static_cast<uint32_t>(data_[pos_ + 2]) << 16) |
                 (static_cast<uint32_t>(data_[pos_ + 3]) << 24);
    pos_ += 4;
    return v;
  }
  uint64_t u64() {
    uint64_t lo = u32();
    uint64_t hi = u32();
    return lo | (hi << 32);
  }
  int32_t i32() { return static_cast<int32_t>(u32()); }

  std::span<const uint8_t> bytes(size_t n) {
    require(n);
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  // DEX LEB128 variants.
  uint32_t uleb128() {
    uint32_t result = 0;
    for (int shift = 0; shift < 35; shift += 7) {
      uint8_t b = u8();
      result |= static_cast<uint32_t>(b & 0x7f) << shift;
      if ((b & 0x80) == 0) return result;
    }
    fail("uleb128 too long", pos_);
    return 0;
  }
  int32_t sleb128() {
    int32_t result = 0;
    int shift = 0;
    uint8_t b;
    do {
      b = u8();
      result |= static_cast<int32_t>(b & 0x7f) << shift;
      shift += 7;
    } while ((b & 0x80) != 0 && shift < 35);
    if (shift < 32 && (b & 0x40) != 0) result |= -(1 << shift);
    return result;
  }
  uint32_t uleb128p1() { return uleb128() - 1; }

  [[noreturn]] void fail(const std::string& what, uint64_t offset) const {
    throw Error(trunc_, what, entry_, offset);
  }

 private:
  void require(size_t n) const {
    if (pos_ + n > data_.size()) {
      fail("need " + std::to_string(n) + " bytes at offset " +
               std::to_string(pos_) + ", have " + std::to_string(remaining()),
           pos_);
    }
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  ErrorCode trunc_;
  std::string entry_;
};

// Little-endian appender used by the fixture encoders and the report cache.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u16(uint16_t v) {
    out_.push_back(static_cast<uint8_t>(v));
    out_.push_back(static_cast<uint8_t>(v >> 8));
  }
  void u32(uint32_t v) {
    u16(static_cast<uint16_t>(v));
    u16(static_cast<uint16_t>(v >> 16));
  }
  void u64(uint64_t v) {
    u32(static_cast<uint32_t>(v));
    u32(static_cast<uint32_t>(v >> 32));
  }
  void raw(std::span<const uint8_t> bytes) {
    out_.insert(out_.end(), bytes.begin(), bytes.end());
  }
  void raw(const std::string& s) {
    out_.insert(out_.end(), s.begin(), s.end());
  }
  void uleb128(uint32_t v) {
    do {
      uint8_t b = v & 0x7f;
      v >>= 7;
      if (v != 0) b |= 0x80;
      out_.push_back(b);
    } while (v != 0);
  }
  void pad_to(size_t alignment, uint8_t fill = 0) {
    while (out_.size() % alignment != 0) out_.push_back(fill);
  }
  void patch_u32(size_t at, uint32_t v) {
    out_[at] = static_cast<uint8_t>(v);
    out_[at + 1] = static_cast<uint8_t>(v >> 8);
    out_[at + 2] = static_cast<uint8_t>(v >> 16);
    out_[at + 3] = static_cast<uint8_t>(v >> 24);
  }

  size_t size() const { return out_.size(); }
  const std::vector<uint8_t>& data() const { return out_; }
  std::vector<uint8_t> take() { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

}  // namespace apkscan
