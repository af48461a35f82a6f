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

#include <string>
#include <string_view>
#include <vector>

namespace apkscan {

std::string ascii_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Splits an identifier into lowercase tokens at '_', '-' and camelCase
// boundaries: "userPhoneNumber" -> {user, phone, number};
// "username" -> {username} (no boundary, no split).
std::vector<std::string> identifier_tokens(std::string_view identifier);

// Splits free text (hints, labels) into lowercase words on non-alphanumeric
// characters.
std::vector<std::string> word_tokens(std::string_view text);

// True when `needle` occurs as a contiguous subsequence of `haystack`.
bool contains_token_sequence(const std::vector<std::string>& haystack,
                             const std::vector<std::string>& needle);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace apkscan
