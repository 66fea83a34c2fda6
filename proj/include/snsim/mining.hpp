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

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace snsim {

/// A (filtering rule, category path) bucket, e.g. Rule 5 / "[10][10]".
struct Item {
  int rule = 0;
  std::string category;

  auto operator<=>(const Item&) const = default;
  bool operator==(const Item&) const = default;
};

/// "Rule5,[10][10]".
std::string to_string(const Item& item);

/// Sorted, duplicate-free.
using ItemSet = std::vector<Item>;
ItemSet make_itemset(std::vector<Item> items);

struct Transaction {
  std::string user;
  ItemSet items;
};

struct TransactionSet {
  std::vector<Transaction> transactions;
  std::size_t size() const noexcept { return transactions.size(); }
};

/// Exact non-negative ratio; comparisons cross-multiply in 128-bit.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::strong_ordering operator<=>(const Rational& o) const noexcept;
  bool operator==(const Rational& o) const noexcept { return (*this <=> o) == 0; }
};

struct LikeRecord {
  std::string user;
  int rule = 0;
  std::string category;
  std::string article;
};

/// Number of posted articles per bucket.
using ArticleIndex = std::map<Item, std::uint64_t>;

/// Bucket sizes inferred from the distinct articles that appear in the likes.
ArticleIndex index_from_likes(std::span<const LikeRecord> likes);

/// One transaction per user holding every bucket in which the user liked
/// strictly more than threshold x (bucket size) distinct articles. Users with
/// no such bucket are dropped; transactions are ordered by user. Throws
/// std::invalid_argument for a like whose bucket is not indexed.
TransactionSet build_transactions(std::span<const LikeRecord> likes, const ArticleIndex& index,
                                  Rational threshold = {1, 2});

/// Transactions containing every item of s; support of the empty set is |T|.
std::uint64_t support(const ItemSet& s, const TransactionSet& t);

/// supp(x u y) / supp(x). Throws std::domain_error when supp(x) == 0.
Rational confidence(const ItemSet& x, const ItemSet& y, const TransactionSet& t);

/// supp(x u y) |T| / (supp(x) supp(y)). Throws std::domain_error when either
/// support is zero.
Rational lift(const ItemSet& x, const ItemSet& y, const TransactionSet& t);

struct MinedRule {
  Item antecedent;
  Item consequent;
  std::uint64_t support = 0;
  Rational confidence;
  Rational lift;

  bool operator==(const MinedRule&) const = default;
};

/// Every single-item rule X -> Y (X != Y) with supp(X u Y) >= min_support and
/// confidence >= min_confidence, ordered by lift desc, support desc, then
/// (antecedent, consequent) ascending.
std::vector<MinedRule> mine_pairs(const TransactionSet& t, std::uint64_t min_support,
                                  double min_confidence);

/// CSV with columns rule,support,confidence,lift.
void write_rules_csv(std::ostream& os, std::span<const MinedRule> rules);
void write_transactions_csv(std::ostream& os, const TransactionSet& t);

}  // namespace snsim
