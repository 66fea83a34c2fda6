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

// File formats written and read by the command-line tool.
//
// events.csv, one event per line, no header:
//   post,<step>,<article>,<poster>,<category>,<evaluation>
//   like,<step>,<agent>,<article>,organic|recommendation
//   share,<step>,<agent>,<article>,<recipient_count>
//
// summary.txt, "<key> <value>" lines: seed, n_steps, posts, likes,
//   organic_likes, recommended_likes, shares, zero_like_articles, max_likes.
//
// categories.csv: category,articles,total_likes,like_mean,persons,ratio
//
// histogram.csv: like_count,article_count (every count from 0 to the max).
// histogram_log2.csv: like_lo,like_hi,article_count over [2^k, 2^(k+1)).
//
// Like CSV (mine --likes): header line, then user,rule,category,article.
// Article CSV (mine --articles): header line, then rule,category,article.
// Observed CSV (report --observed): header line, then
//   label,likes_before,reach_before,likes_after,reach_after.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "snsim/engine.hpp"
#include "snsim/mining.hpp"
#include "snsim/stats.hpp"

namespace snsim {

void write_events(std::ostream& os, const RunResult& r);

struct EventFile {
  std::vector<Article> articles;  // like_count replayed from the like lines
  EventLog events;
};

/// Throws ConfigError naming the offending line.
EventFile read_events(std::istream& is);
EventFile read_events(const std::filesystem::path& path);

void write_summary(std::ostream& os, const RunResult& r);
void write_categories_csv(std::ostream& os, const RunResult& r);

/// Writes `path` via a temporary sibling and a rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& body);

/// events.csv, summary.txt, categories.csv, histogram.csv, histogram_log2.csv
/// and config.json into `dir` (created if missing). Events are skipped when
/// `with_events` is false.
void write_run(const std::filesystem::path& dir, const RunResult& r, bool with_events = true);

/// Like records keyed by (category id, category label). Labels come from
/// `config` when given, otherwise "[R]".
struct LikeTable {
  std::vector<LikeRecord> likes;
  ArticleIndex index;
};
LikeTable likes_from_events(const EventFile& f, const SimConfig* config);

std::vector<LikeRecord> read_likes_csv(const std::filesystem::path& path);
ArticleIndex read_articles_csv(const std::filesystem::path& path);
std::vector<RepostObservation> read_observed_csv(const std::filesystem::path& path);

/// Splits one CSV record; double quotes group fields and "" escapes a quote.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace snsim
