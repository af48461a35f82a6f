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

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pii/embedding.hpp"

namespace apkscan::pii {

// The manual-review hook around synonym expansion: denied words are rejected,
// and when an allow list is present only listed words are accepted.
struct ReviewLists {
  bool has_allow = false;
  std::set<std::string> allow;
  std::set<std::string> deny;

  bool accepts(const std::string& word) const {
    if (deny.count(word)) return false;
    if (has_allow) return allow.count(word) > 0;
    return true;
  }
};

struct Expansion {
  std::string word;
  double similarity = 0;
  bool accepted = true;

  bool operator==(const Expansion&) const = default;
};

struct KeywordDatabase {
  std::vector<std::string> seeds;  // file order, lowercased, deduplicated
  std::map<std::string, std::vector<Expansion>> expanded;
  std::vector<std::string> all_keywords;  // seeds then accepted synonyms
  size_t k = 5;

  bool contains(const std::string& keyword) const;
  // token forms aligned with all_keywords, for identifier matching
  std::vector<std::vector<std::string>> keyword_token_lists() const;
};

// One token per line, '#' comments.
std::vector<std::string> load_wordlist_text(const std::string& text);
std::vector<std::string> load_wordlist_file(const std::string& path);
ReviewLists load_review_lists(const std::string& allow_path,
                              const std::string& deny_path);

// Top-k synonym expansion by cosine similarity, ties broken lexicographically.
// Seeds missing from the vocabulary get an empty expansion plus a warning.
KeywordDatabase expand_keywords(const EmbeddingStore& store,
                                const std::vector<std::string>& seeds, size_t k,
                                const ReviewLists& review = {},
                                WarningList* warnings = nullptr);

// Seeds-only database (no embedding available at scan time).
KeywordDatabase seeds_only_database(const std::vector<std::string>& seeds);

nlohmann::json database_to_json(const KeywordDatabase& db);
KeywordDatabase database_from_json(const nlohmann::json& j);

}  // namespace apkscan::pii
