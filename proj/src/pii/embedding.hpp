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

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "support/error.hpp"

namespace apkscan::pii {

// Word vectors in word2vec text format: a "<count> <dimension>" header line,
// then one "word v1 .. vd" row per word.  Keys are lowercased on load.
class EmbeddingStore {
 public:
  size_t dimension() const { return dimension_; }
  size_t size() const { return vocab_.size(); }
  const std::vector<double>* vector_of(const std::string& word) const;
  const std::map<std::string, std::vector<double>>& vocab() const {
    return vocab_;
  }

  friend EmbeddingStore load_embeddings(std::istream& in,
                                        WarningList* warnings);

 private:
  size_t dimension_ = 0;
  std::map<std::string, std::vector<double>> vocab_;
};

EmbeddingStore load_embeddings(std::istream& in, WarningList* warnings = nullptr);
EmbeddingStore load_embeddings_file(const std::string& path,
                                    WarningList* warnings = nullptr);

// cosine(a, b); zero vectors compare as 0 rather than dividing by zero
double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b);

}  // namespace apkscan::pii
