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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

using namespace snsim;

TEST_CASE("tf counts occurrences over document length") {
  const Document d = {"a", "b", "a"};
  CHECK(tf("a", d) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(tf("z", d) == 0.0);
  CHECK(tf("x", Document{"x"}) == 1.0);
  CHECK_THROWS_AS(tf("a", Document{}), std::invalid_argument);
}

TEST_CASE("idf uses the natural log of |D| / df") {
  const Corpus c({{"a", "b", "a"}, {"b", "c"}});
  CHECK(idf("b", c) == 0.0);
  CHECK(std::abs(idf("a", c) - 0.6931471805599453) <= 1e-12);
  CHECK_THROWS_WITH_AS(idf("zzz", c), doctest::Contains("term not in corpus"),
                       std::invalid_argument);
}

TEST_CASE("tfidf on the two-document fixture") {
  const Corpus c({{"a", "b", "a"}, {"b", "c"}});
  // (2/3) * ln 2, by hand.
  CHECK(std::abs(tfidf("a", c[0], c) - 0.46209812037329684) <= 1e-12);
  CHECK(tfidf("b", c[0], c) == 0.0);
  CHECK(tfidf("c", c[0], c) == 0.0);
  CHECK(tfidf("never", c[0], c) == 0.0);
  CHECK(std::abs(tfidf("c", c[1], c) - 0.5 * std::log(2.0)) <= 1e-12);
}

TEST_CASE("tokenize lowercases and splits on punctuation") {
  CHECK(tokenize("Oysters, oysters; and the SEA!") ==
        std::vector<std::string>{"oysters", "oysters", "and", "the", "sea"});
  CHECK(tokenize("   ").empty());
  CHECK(tokenize("江田島 beach") == std::vector<std::string>{"江田島", "beach"});
}

namespace {

Corpus random_corpus(std::mt19937_64& rng, std::size_t docs) {
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> word(0, 6);
  std::vector<Document> out(docs);
  for (auto& d : out) {
    const int n = len(rng);
    for (int i = 0; i < n; ++i) d.push_back(std::string(1, static_cast<char>('a' + word(rng))));
  }
  return Corpus(std::move(out));
}

}  // namespace

TEST_CASE("tf sums to one over a document's distinct terms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Corpus c = random_corpus(rng, 6);
    for (const Document& d : c.documents()) {
      std::set<std::string> distinct(d.begin(), d.end());
      double sum = 0.0;
      for (const auto& t : distinct) sum += tf(t, d);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("tfidf is zero exactly when the term is absent or everywhere") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Corpus c = random_corpus(rng, 5);
    for (const Document& d : c.documents())
      for (char ch = 'a'; ch <= 'g'; ++ch) {
        const std::string t(1, ch);
        const bool absent = tf(t, d) == 0.0;
        const bool everywhere = c.document_frequency(t) == c.size();
        CHECK((tfidf(t, d, c) == 0.0) == (absent || everywhere));
      }
  }
}

TEST_CASE("tfidf is unchanged when every document is duplicated") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus c = random_corpus(rng, 4);
    std::vector<Document> doubled(c.documents().begin(), c.documents().end());
    doubled.insert(doubled.end(), c.documents().begin(), c.documents().end());
    const Corpus c2(std::move(doubled));
    for (const Document& d : c.documents())
      for (const auto& t : d) CHECK(std::abs(tfidf(t, d, c) - tfidf(t, d, c2)) <= 1e-12);
  }
}

TEST_CASE("match_rules picks the lowest matching id") {
  const Corpus c({{"oyster", "bay"}, {"temple", "bay"}, {"oyster", "oyster", "boat"}});
  const Post post{"[R][10][10]", 4, {"oyster", "oyster", "boat"}};

  CHECK(match_rules(post, {}, c) == std::nullopt);

  const std::vector<FilterRule> one = {{5, "[R][10][10]", 3, {}}};
  CHECK(match_rules(post, one, c) == 5);

  const std::vector<FilterRule> two = {{9, "[R][10][10]", 0, {}}, {4, "[R][10][10]", 2, {}}};
  CHECK(match_rules(post, two, c) == 4);

  const std::vector<FilterRule> other_label = {{1, "[R][11][10]", 0, {}}};
  CHECK(match_rules(post, other_label, c) == std::nullopt);

  const std::vector<FilterRule> too_strict = {{1, "[R][10][10]", 4, {}}};
  Post weaker = post;
  weaker.evaluation = 3;
  CHECK(match_rules(weaker, too_strict, c) == std::nullopt);

  // tfidf(oyster, post) = (2/3) ln(3/2) ~ 0.2703
  const std::vector<FilterRule> keyword = {{2, "[R][10][10]", 0, {{"Oyster", 0.27}}},
                                           {3, "[R][10][10]", 0, {{"oyster", 0.28}}}};
  CHECK(match_rules(post, keyword, c) == 2);
  const std::vector<FilterRule> keyword_high = {{3, "[R][10][10]", 0, {{"oyster", 0.28}}}};
  CHECK(match_rules(post, keyword_high, c) == std::nullopt);
  const std::vector<FilterRule> unknown_term = {{3, "[R][10][10]", 0, {{"castle", 0.0}}}};
  CHECK(match_rules(post, unknown_term, c) == std::nullopt);
}
