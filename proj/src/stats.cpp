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

#include "snsim/stats.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace snsim {

std::uint64_t Histogram::total() const noexcept {
  std::uint64_t t = 0;
  for (const Bin& b : bins) t += b.count;
  return t;
}

Histogram like_histogram(std::span<const Article> articles) {
  Histogram h;
  if (articles.empty()) return h;
  std::uint32_t top = 0;
  for (const Article& a : articles) top = std::max(top, a.like_count);
  h.bins.resize(std::size_t{top} + 1);
  for (std::uint32_t n = 0; n <= top; ++n) h.bins[n] = {n, std::uint64_t{n} + 1, 0};
  for (const Article& a : articles) ++h.bins[a.like_count].count;
  return h;
}

Histogram like_histogram(const RunResult& r) { return like_histogram(r.articles); }

Histogram log2_binned(const Histogram& h) {
  Histogram out;
  for (const Bin& b : h.bins) {
    if (b.lo == 0 || b.count == 0) continue;
    const auto level = static_cast<std::size_t>(std::bit_width(b.lo) - 1);
    while (out.bins.size() <= level) {
      const std::uint64_t lo = std::uint64_t{1} << out.bins.size();
      out.bins.push_back({lo, lo * 2, 0});
    }
    out.bins[level].count += b.count;
  }
  return out;
}

std::size_t modality_count(const Histogram& h, std::size_t window) {
  if (window == 0) throw std::invalid_argument("modality_count: window must be >= 1");
  const auto first = std::find_if(h.bins.begin(), h.bins.end(),
                                  [](const Bin& b) { return b.count > 0; });
  if (first == h.bins.end()) return 0;
  const auto last = std::find_if(h.bins.rbegin(), h.bins.rend(),
                                 [](const Bin& b) { return b.count > 0; });
  const auto lo = static_cast<std::size_t>(first - h.bins.begin());
  const auto hi = h.bins.size() - static_cast<std::size_t>(last - h.bins.rbegin());
  const std::size_t n = hi - lo;

  const std::size_t left = (window - 1) / 2;
  const std::size_t right = window / 2;
  // Bins outside [lo, hi) are empty, so the window is zero-padded there.
  std::vector<double> smooth(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = i >= left ? i - left : 0;
    const std::size_t b = std::min(n - 1, i + right);
    double sum = 0.0;
    for (std::size_t k = a; k <= b; ++k) sum += static_cast<double>(h.bins[lo + k].count);
    smooth[i] = sum / static_cast<double>(window);
  }

  std::size_t maxima = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && smooth[j + 1] == smooth[i]) ++j;
    const bool above_left = i == 0 || smooth[i - 1] < smooth[i];
    const bool above_right = j + 1 == n || smooth[j + 1] < smooth[i];
    if (above_left && above_right) ++maxima;
    i = j + 1;
  }
  return maxima;
}

std::vector<CategorySummary> summarize(const RunResult& r) {
  std::vector<CategorySummary> out;
  for (const CategoryAggregate& a : r.categories) {
    const double articles = static_cast<double>(a.articles);
    out.push_back({a.category, articles,
                   a.articles ? static_cast<double>(a.total_likes) / articles : 0.0,
                   static_cast<double>(a.persons)});
  }
  return out;
}

namespace {

CategorySide side_of(const CategorySummary& s) {
  return {s.articles, s.like_mean, s.persons, s.persons > 0 ? s.like_mean / s.persons : 0.0};
}

template <typename Get>
std::pair<double, double> mean_var(const std::vector<CategoryRow>& rows, Get get) {
  if (rows.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (const auto& r : rows) mean += get(r);
  mean /= static_cast<double>(rows.size());
  double var = 0.0;
  for (const auto& r : rows) var += (get(r) - mean) * (get(r) - mean);
  return {mean, var / static_cast<double>(rows.size())};
}

void fill_summaries(CategoryReport& rep) {
  auto stat_side = [&](CategorySide CategoryRow::*side, CategorySide ReportSummary::*out) {
    auto one = [&](double CategorySide::*field) {
      auto [m, v] = mean_var(rep.rows, [&](const CategoryRow& r) { return (r.*side).*field; });
      (rep.average.*out).*field = m;
      (rep.variance.*out).*field = v;
      (rep.stddev.*out).*field = std::sqrt(v);
    };
    one(&CategorySide::articles);
    one(&CategorySide::like_mean);
    one(&CategorySide::persons);
    one(&CategorySide::ratio);
  };
  stat_side(&CategoryRow::without_altruism, &ReportSummary::without_altruism);
  stat_side(&CategoryRow::with_altruism, &ReportSummary::with_altruism);
  auto [m, v] = mean_var(rep.rows, [](const CategoryRow& r) { return r.diff; });
  rep.average.diff = m;
  rep.variance.diff = v;
  rep.stddev.diff = std::sqrt(v);
}

}  // namespace

CategoryReport category_report(std::span<const CategorySummary> without_altruism,
                               std::span<const CategorySummary> with_altruism) {
  if (without_altruism.size() != with_altruism.size())
    throw ConfigError("category_report: runs list different numbers of categories");
  CategoryReport rep;
  for (std::size_t i = 0; i < without_altruism.size(); ++i) {
    const auto& a = without_altruism[i];
    const auto& b = with_altruism[i];
    if (a.category != b.category)
      throw ConfigError(fmt::format("category_report: category mismatch at row {} ({} vs {})",
                                    i, a.category, b.category));
    rep.rows.push_back({a.category, side_of(a), side_of(b), b.like_mean - a.like_mean});
  }
  fill_summaries(rep);
  return rep;
}

CategoryReport category_report(const PairResult& pair) {
  auto without = summarize(pair.without_altruism);
  auto with = summarize(pair.with_altruism);
  if (without.size() != with.size())
    throw ConfigError("category_report: runs list different numbers of categories");
  std::vector<CategorySummary> a, b;
  for (std::size_t i = 0; i < without.size(); ++i) {
    if (without[i].articles == 0 && i < with.size() && with[i].articles == 0) continue;
    a.push_back(without[i]);
    b.push_back(with[i]);
  }
  return category_report(a, b);
}

namespace {

void csv_side(std::ostream& os, const CategorySide& s) {
  fmt::print(os, ",{:.2f},{:.4f},{:.2f},{:.6f}", s.articles, s.like_mean, s.persons, s.ratio);
}

void text_side(std::ostream& os, const CategorySide& s) {
  fmt::print(os, " {:>10.2f} {:>10.2f} {:>9.2f} {:>8.4f} |", s.articles, s.like_mean,
             s.persons, s.ratio);
}

}  // namespace

void write_report_csv(std::ostream& os, const CategoryReport& r) {
  os << "category,articles_without,like_mean_without,persons_without,ratio_without,"
        "articles_with,like_mean_with,persons_with,ratio_with,diff\n";
  for (const auto& row : r.rows) {
    os << row.category;
    csv_side(os, row.without_altruism);
    csv_side(os, row.with_altruism);
    fmt::print(os, ",{:.4f}\n", row.diff);
  }
  auto summary = [&](const char* name, const ReportSummary& s) {
    os << name;
    csv_side(os, s.without_altruism);
    csv_side(os, s.with_altruism);
    fmt::print(os, ",{:.4f}\n", s.diff);
  };
  summary("average", r.average);
  summary("variance", r.variance);
  summary("stddev", r.stddev);
}

void write_report_text(std::ostream& os, const CategoryReport& r) {
  fmt::print(os, "{:>9} | {:^42} | {:^42} | {:>8}\n", "", "without altruism",
             "with altruism", "");
  fmt::print(os, "{:>9} |", "category");
  for (int side = 0; side < 2; ++side)
    fmt::print(os, " {:>10} {:>10} {:>9} {:>8} |", "articles", "like ave", "persons", "ratio");
  fmt::print(os, " {:>8}\n", "diff");
  for (const auto& row : r.rows) {
    fmt::print(os, "{:>9} |", row.category);
    text_side(os, row.without_altruism);
    text_side(os, row.with_altruism);
    fmt::print(os, " {:>8.2f}\n", row.diff);
  }
  auto summary = [&](const char* name, const ReportSummary& s) {
    fmt::print(os, "{:>9} |", name);
    text_side(os, s.without_altruism);
    text_side(os, s.with_altruism);
    fmt::print(os, " {:>8.2f}\n", s.diff);
  };
  summary("average", r.average);
  summary("variance", r.variance);
  summary("stddev", r.stddev);
}

std::vector<RepostRow> repost_report(std::span<const RepostObservation> observed) {
  std::vector<RepostRow> out;
  for (const auto& o : observed) {
    if (o.likes_before < 0 || o.reach_before < 0 || o.likes_after < 0 || o.reach_after < 0)
      throw ConfigError("repost_report: negative count in row \"" + o.label + "\"");
    out.push_back({o, o.likes_after - o.likes_before, o.reach_after - o.reach_before});
  }
  return out;
}

void write_repost_csv(std::ostream& os, std::span<const RepostRow> rows) {
  os << "label,likes_before,reach_before,likes_after,reach_after,likes_delta,reach_delta\n";
  for (const auto& r : rows)
    fmt::print(os, "{},{},{},{},{},{:+d},{:+d}\n", r.observed.label, r.observed.likes_before,
               r.observed.reach_before, r.observed.likes_after, r.observed.reach_after,
               r.likes_delta, r.reach_delta);
}

void write_repost_text(std::ostream& os, std::span<const RepostRow> rows) {
  fmt::print(os, "{:<12} | {:>7} {:>7} | {:>7} {:>7} | {:>7} {:>7}\n", "information",
             "likes", "reach", "likes", "reach", "d.likes", "d.reach");
  fmt::print(os, "{:<12} | {:^15} | {:^15} | {:^15}\n", "", "before", "after", "delta");
  for (const auto& r : rows)
    fmt::print(os, "{:<12} | {:>7} {:>7} | {:>7} {:>7} | {:>+7d} {:>+7d}\n", r.observed.label,
               r.observed.likes_before, r.observed.reach_before, r.observed.likes_after,
               r.observed.reach_after, r.likes_delta, r.reach_delta);
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
  const bool unit = std::all_of(h.bins.begin(), h.bins.end(),
                                [](const Bin& b) { return b.hi == b.lo + 1; });
  if (unit) {
    os << "like_count,article_count\n";
    for (const Bin& b : h.bins) fmt::print(os, "{},{}\n", b.lo, b.count);
  } else {
    os << "like_lo,like_hi,article_count\n";
    for (const Bin& b : h.bins) fmt::print(os, "{},{},{}\n", b.lo, b.hi, b.count);
  }
}

}  // namespace snsim
