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

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "snsim/engine.hpp"

namespace snsim {

/// Half-open like-count interval [lo, hi) and the number of articles in it.
struct Bin {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t count = 0;

  bool operator==(const Bin&) const = default;
};

struct Histogram {
  std::vector<Bin> bins;

  std::uint64_t total() const noexcept;
  bool operator==(const Histogram&) const = default;
};

/// Unit bins from 0 to the largest like count; zero-like articles land in [0, 1).
Histogram like_histogram(std::span<const Article> articles);
Histogram like_histogram(const RunResult& r);

/// Powers-of-two bins [1,2), [2,4), [4,8), ... for log-log plots. Zero-like
/// articles have no position on a logarithmic axis and are dropped.
Histogram log2_binned(const Histogram& h);

/// Number of local maxima of the centered moving average (width `window`,
/// zero-padded past the ends) over the bins between the first and last
/// non-empty bin. A run of equal values counts once. Throws std::invalid_argument for
/// window == 0.
std::size_t modality_count(const Histogram& h, std::size_t window);

/// Inputs to one side of a Table-I style row.
struct CategorySummary {
  CategoryId category = 0;
  double articles = 0.0;
  double like_mean = 0.0;
  double persons = 0.0;
};

struct CategorySide {
  double articles = 0.0;
  double like_mean = 0.0;
  double persons = 0.0;
  /// like_mean / persons, 0 when persons == 0.
  double ratio = 0.0;
};

struct CategoryRow {
  CategoryId category = 0;
  CategorySide without_altruism;
  CategorySide with_altruism;
  /// with like_mean - without like_mean.
  double diff = 0.0;
};

/// Column statistics over the category rows (unweighted).
struct ReportSummary {
  CategorySide without_altruism;
  CategorySide with_altruism;
  double diff = 0.0;
};

struct CategoryReport {
  std::vector<CategoryRow> rows;
  ReportSummary average;
  ReportSummary variance;  // population variance
  ReportSummary stddev;    // population standard deviation
};

std::vector<CategorySummary> summarize(const RunResult& r);

/// Throws ConfigError when the two sides do not list the same categories in
/// the same order.
CategoryReport category_report(std::span<const CategorySummary> without_altruism,
                               std::span<const CategorySummary> with_altruism);
/// Categories with no articles in either run are left out.
CategoryReport category_report(const PairResult& pair);

void write_report_csv(std::ostream& os, const CategoryReport& r);
void write_report_text(std::ostream& os, const CategoryReport& r);

struct RepostObservation {
  std::string label;
  std::int64_t likes_before = 0;
  std::int64_t reach_before = 0;
  std::int64_t likes_after = 0;
  std::int64_t reach_after = 0;
};

struct RepostRow {
  RepostObservation observed;
  std::int64_t likes_delta = 0;
  std::int64_t reach_delta = 0;
};

/// Deltas are after - before and keep their sign. Throws ConfigError on
/// negative counts.
std::vector<RepostRow> repost_report(std::span<const RepostObservation> observed);

void write_repost_csv(std::ostream& os, std::span<const RepostRow> rows);
void write_repost_text(std::ostream& os, std::span<const RepostRow> rows);

void write_histogram_csv(std::ostream& os, const Histogram& h);

}  // namespace snsim
