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

#include "snsim/filtering.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_set>

namespace snsim {

namespace {

bool is_separator(unsigned char ch) {
  return ch < 0x80 && (std::isspace(ch) || std::ispunct(ch));
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& ch : out)
    if (static_cast<unsigned char>(ch) < 0x80)
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (is_separator(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  for (auto& t : out) t = lower_ascii(t);
  return out;
}

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  for (const Document& d : documents_) {
    std::unordered_set<std::string_view> seen;
    for (const std::string& t : d) {
      if (t.empty()) throw std::invalid_argument("corpus: empty token");
      if (seen.insert(t).second) ++df_[t];
    }
  }
}

std::size_t Corpus::document_frequency(std::string_view term) const {
  auto it = df_.find(std::string(term));
  return it == df_.end() ? 0 : it->second;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read corpus file " + path.string());
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) docs.push_back(tokenize(line));
  return Corpus(std::move(docs));
}

double tf(std::string_view term, const Document& d) {
  if (d.empty()) throw std::invalid_argument("tf: empty document");
  const auto n = std::count(d.begin(), d.end(), term);
  return static_cast<double>(n) / static_cast<double>(d.size());
}

double idf(std::string_view term, const Corpus& c) {
  if (c.size() == 0) throw std::invalid_argument("idf: empty corpus");
  const std::size_t df = c.document_frequency(term);
  if (df == 0) throw std::invalid_argument("term not in corpus: " + std::string(term));
  return std::log(static_cast<double>(c.size()) / static_cast<double>(df));
}

double tfidf(std::string_view term, const Document& d, const Corpus& c) {
  const double f = tf(term, d);
  if (f == 0.0) return 0.0;
  return f * idf(term, c);
}

std::optional<int> match_rules(const Post& post, std::span<const FilterRule> rules,
                               const Corpus& c) {
  std::vector<const FilterRule*> order;
  for (const FilterRule& r : rules) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const FilterRule* a, const FilterRule* b) { return a->id < b->id; });

  for (const FilterRule* r : order) {
    if (r->category_pattern != post.category_label) continue;
    if (post.evaluation < r->min_evaluation) continue;
    bool keywords_ok = true;
    for (const KeywordConstraint& kw : r->keywords) {
      const std::string term = lower_ascii(kw.term);
      if (post.comment.empty() || c.size() == 0 || c.document_frequency(term) == 0) {
        keywords_ok = false;
        break;
      }
      if (tfidf(term, post.comment, c) < kw.min_score) {
        keywords_ok = false;
        break;
      }
    }
    if (keywords_ok) return r->id;
  }
  return std::nullopt;
}

}  // namespace snsim
