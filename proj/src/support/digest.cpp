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

#include "support/digest.hpp"

#include <openssl/sha.h>
#include <zlib.h>

namespace apkscan {

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

std::array<uint8_t, 20> sha1(std::span<const uint8_t> data) {
  std::array<uint8_t, 20> out{};
  SHA1(data.data(), data.size(), out.data());
  return out;
}

std::string hex_encode(std::span<const uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

uint32_t adler32_of(std::span<const uint8_t> data) {
  return static_cast<uint32_t>(
      adler32(adler32(0L, nullptr, 0), data.data(),
              static_cast<uInt>(data.size())));
}

uint32_t crc32_of(std::span<const uint8_t> data) {
  return static_cast<uint32_t>(
      crc32(crc32(0L, nullptr, 0), data.data(), static_cast<uInt>(data.size())));
}

}  // namespace apkscan
