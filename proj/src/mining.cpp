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

#include "snsim/mining.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace snsim {

std::string to_string(const Item& item) {
  return fmt::format("Rule{},{}", item.rule, item.category);
}

ItemSet make_itemset(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  const auto lhs = static_cast<unsigned __int128>(num) * o.den;
  const auto rhs = static_cast<unsigned __int128>(o.num) * den;
  return lhs <=> rhs;
}

namespace {

Rational reduced(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

bool contains_all(const ItemSet& haystack, const ItemSet& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ArticleIndex index_from_likes(std::span<const LikeRecord> likes) {
  std::map<Item, std::set<std::string>> articles;
  for (const auto& l : likes) articles[{l.rule, l.category}].insert(l.article);
  ArticleIndex out;
  for (const auto& [item, ids] : articles) out[item] = ids.size();
  return out;
}

TransactionSet build_transactions(std::span<const LikeRecord> likes, const ArticleIndex& index,
                                  Rational threshold) {
  std::map<std::string, std::map<Item, std::set<std::string>>> per_user;
  for (const auto& l : likes) {
    Item item{l.rule, l.category};
    if (!index.count(item))
      throw std::invalid_argument("like references unknown bucket " + to_string(item));
    per_user[l.user][item].insert(l.article);
  }
  TransactionSet out;
  for (const auto& [user, buckets] : per_user) {
    ItemSet items;
    for (const auto& [item, liked] : buckets) {
      const auto bucket_size = index.at(item);
      // liked / bucket_size > num / den
      const auto lhs = static_cast<unsigned __int128>(liked.size()) * threshold.den;
      const auto rhs = static_cast<unsigned __int128>(threshold.num) * bucket_size;
      if (lhs > rhs) items.push_back(item);
    }
    if (!items.empty()) out.transactions.push_back({user, std::move(items)});
  }
  return out;
}

std::uint64_t support(const ItemSet& s, const TransactionSet& t) {
  return static_cast<std::uint64_t>(
      std::count_if(t.transactions.begin(), t.transactions.end(),
                    [&](const Transaction& tr) { return contains_all(tr.items, s); }));
}

Rational confidence(const ItemSet& x, const ItemSet& y, const TransactionSet& t) {
  const auto sx = support(x, t);
  if (sx == 0) throw std::domain_error("confidence: antecedent has zero support");
  return reduced(support(set_union(x, y), t), sx);
}

Rational lift(const ItemSet& x, const ItemSet& y, const TransactionSet& t) {
  const auto sx = support(x, t);
  const auto sy = support(y, t);
  if (sx == 0 || sy == 0) throw std::domain_error("lift: zero-support antecedent or consequent");
  return reduced(support(set_union(x, y), t) * t.size(), sx * sy);
}

std::vector<MinedRule> mine_pairs(const TransactionSet& t, std::uint64_t min_support,
                                  double min_confidence) {
  std::vector<Item> universe;
  for (const auto& tr : t.transactions)
    universe.insert(universe.end(), tr.items.begin(), tr.items.end());
  universe = make_itemset(std::move(universe));

  // Per-item bitset over transactions.
  const std::size_t words = (t.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(universe.size(),
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t ti = 0; ti < t.size(); ++ti)
    for (const Item& item : t.transactions[ti].items) {
      const auto ii = static_cast<std::size_t>(
          std::lower_bound(universe.begin(), universe.end(), item) - universe.begin());
      bits[ii][ti / 64] |= std::uint64_t{1} << (ti % 64);
    }
  std::vector<std::uint64_t> single(universe.size(), 0);
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (auto w : bits[i]) single[i] += static_cast<std::uint64_t>(std::popcount(w));

  std::vector<MinedRule> out;
  const auto n = static_cast<std::uint64_t>(t.size());
  for (std::size_t x = 0; x < universe.size(); ++x) {
    for (std::size_t y = 0; y < universe.size(); ++y) {
      if (x == y) continue;
      std::uint64_t both = 0;
      for (std::size_t w = 0; w < words; ++w)
        both += static_cast<std::uint64_t>(std::popcount(bits[x][w] & bits[y][w]));
      if (both < min_support) continue;
      const Rational conf = reduced(both, single[x]);
      if (static_cast<long double>(conf.num) <
          static_cast<long double>(min_confidence) * static_cast<long double>(conf.den))
        continue;
      out.push_back({universe[x], universe[y], both, conf,
                     reduced(both * n, single[x] * single[y])});
    }
  }
  std::sort(out.begin(), out.end(), [](const MinedRule& a, const MinedRule& b) {
    if (auto c = a.lift <=> b.lift; c != 0) return c > 0;
    if (a.support != b.support) return a.support > b.support;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  return out;
}

void write_rules_csv(std::ostream& os, std::span<const MinedRule> rules) {
  os << "rule,support,confidence,lift\n";
  for (const auto& r : rules)
    fmt::print(os, "\"{} => {}\",{},{:.6f},{:.6f}\n", to_string(r.antecedent),
               to_string(r.consequent), r.support, r.confidence.value(), r.lift.value());
}

void write_transactions_csv(std::ostream& os, const TransactionSet& t) {
  os << "user,items\n";
  for (const auto& tr : t.transactions) {
    std::string items;
    for (const auto& item : tr.items) {
      if (!items.empty()) items += ';';
      items += to_string(item);
    }
    fmt::print(os, "{},\"{}\"\n", tr.user, items);
  }
}

}  // namespace snsim
