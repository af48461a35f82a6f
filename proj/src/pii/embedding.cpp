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

#include "pii/embedding.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "support/text.hpp"

namespace apkscan::pii {

const std::vector<double>* EmbeddingStore::vector_of(
    const std::string& word) const {
  auto it = vocab_.find(ascii_lower(word));
  return it == vocab_.end() ? nullptr : &it->second;
}

EmbeddingStore load_embeddings(std::istream& in, WarningList* warnings) {
  EmbeddingStore store;
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::BadHeader, "embedding stream is empty");
  }
  std::istringstream header(line);
  long long declared_count = -1;
  long long dimension = -1;
  if (!(header >> declared_count >> dimension) || declared_count < 0 ||
      dimension <= 0) {
    throw Error(ErrorCode::BadHeader,
                "expected '<vocab_count> <dimension>' header, got: " + line);
  }
  store.dimension_ = static_cast<size_t>(dimension);

  size_t rows = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    std::vector<double> vec;
    vec.reserve(store.dimension_);
    double v;
    while (row >> v) vec.push_back(v);
    if (vec.size() != store.dimension_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row '" + word + "' has " + std::to_string(vec.size()) +
                      " components, expected " +
                      std::to_string(store.dimension_));
    }
    for (double c : vec) {
      if (!std::isfinite(c)) {
        throw Error(ErrorCode::NonFiniteValue,
                    "row '" + word + "' contains a non-finite component");
      }
    }
    std::string key = ascii_lower(word);
    if (store.vocab_.count(key)) {
      warn(warnings, "duplicate-embedding",
           "word '" + key + "' appears twice; first occurrence kept");
    } else {
      store.vocab_.emplace(std::move(key), std::move(vec));
    }
    ++rows;
  }
  if (rows != static_cast<size_t>(declared_count)) {
    throw Error(ErrorCode::BadHeader,
                "header declares " + std::to_string(declared_count) +
                    " words, stream has " + std::to_string(rows));
  }
  return store;
}

EmbeddingStore load_embeddings_file(const std::string& path,
                                    WarningList* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open embeddings file " + path);
  }
  return load_embeddings(in, warnings);
}

double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b) {
  double dot = 0;
  double na = 0;
  double nb = 0;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace apkscan::pii
