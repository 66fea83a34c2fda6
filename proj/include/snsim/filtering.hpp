// Copyright 2026 The snsim Authors.
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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snsim/model.hpp"

namespace snsim {

using Document = std::vector<std::string>;

/// Lowercases ASCII and splits on whitespace and ASCII punctuation. Bytes
/// outside ASCII are kept inside tokens, so UTF-8 text passes through.
std::vector<std::string> tokenize(std::string_view text);

class Corpus {
 public:
  /// Throws std::invalid_argument if any token is empty.
  explicit Corpus(std::vector<Document> documents);

  std::size_t size() const noexcept { return documents_.size(); }
  const Document& operator[](std::size_t i) const { return documents_.at(i); }
  std::span<const Document> documents() const noexcept { return documents_; }

  /// Number of documents containing the term at least once.
  std::size_t document_frequency(std::string_view term) const;

 private:
  std::vector<Document> documents_;
  std::unordered_map<std::string, std::size_t> df_;
};

/// One document per line, tokenized with tokenize(). Empty lines are kept as
/// empty documents so line numbers stay valid indices.
Corpus load_corpus(const std::filesystem::path& path);

/// n(t,d) / |d|. Throws std::invalid_argument for an empty document.
double tf(std::string_view term, const Document& d);

/// Natural log of |D| / df(t). Throws std::invalid_argument when the corpus is
/// empty or the term appears in no document.
double idf(std::string_view term, const Corpus& c);

/// tf * idf; 0 when the term is absent from the document.
double tfidf(std::string_view term, const Document& d, const Corpus& c);

struct Post {
  std::string category_label;
  int evaluation = 0;
  Document comment;
};

/// Lowest-id rule whose pattern equals the post's label, whose minimum
/// evaluation is met, and whose keyword scores all reach their minimum. A
/// keyword missing from the whole corpus has no score and fails its constraint.
std::optional<int> match_rules(const Post& post, std::span<const FilterRule> rules,
                               const Corpus& c);

}  // namespace snsim
