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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snsim/model.hpp"

namespace snsim {

enum class EventKind : std::uint8_t { kPost, kLike, kShare };
enum class LikeVia : std::uint8_t { kNone, kOrganic, kRecommendation };

/// One log entry. `agent` is the poster (major agent) for kPost and the minor
/// agent otherwise; `recipients` is only meaningful for kShare.
struct Event {
  EventKind kind = EventKind::kPost;
  LikeVia via = LikeVia::kNone;
  std::uint32_t step = 0;
  AgentId agent = 0;
  ArticleId article = 0;
  std::uint32_t recipients = 0;

  bool operator==(const Event&) const = default;
};

using EventLog = std::vector<Event>;

struct CategoryAggregate {
  CategoryId category = 0;
  std::uint64_t articles = 0;
  std::uint64_t total_likes = 0;
  /// Distinct minor agents that liked at least one article in the category.
  std::uint64_t persons = 0;

  bool operator==(const CategoryAggregate&) const = default;
};

struct RunResult {
  SimConfig config;
  std::uint64_t seed = 0;
  EventLog events;
  std::vector<Article> articles;
  std::vector<CategoryAggregate> categories;

  std::uint64_t count(EventKind kind) const noexcept;
  std::uint64_t total_likes() const noexcept;
};

/// Counter-based draws keyed by (seed, purpose, article, agent), so a draw
/// does not depend on how many draws came before it.
class KeyedUniform {
 public:
  enum class Purpose : std::uint64_t { kView = 1, kCoin = 2, kFanout = 3 };

  KeyedUniform(std::uint64_t seed, Purpose purpose) noexcept;
  double operator()(ArticleId article, AgentId agent) const noexcept;
  std::uint64_t bits(ArticleId article, AgentId agent) const noexcept;

 private:
  std::uint64_t key_;
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct World {
  ValidatedConfig config;
  std::uint32_t step = 0;
  std::vector<MajorAgent> majors;
  std::vector<MinorAgent> minors;
  std::vector<Article> articles;
  EventLog events;

  std::mt19937_64 posting_rng;
  std::mt19937_64 evaluation_rng;
  KeyedUniform view_draw;
  KeyedUniform coin_draw;
  KeyedUniform fanout_draw;
};

/// Builds agents; interests come from the agent-init substream.
World init_world(const ValidatedConfig& c);

/// Advances one step: posting, organic viewing, then the share cascade queue.
void step(World& w);

RunResult finish(World&& w);
RunResult run(const ValidatedConfig& c);

struct PairResult {
  RunResult without_altruism;
  RunResult with_altruism;
};

/// Same seed and substreams, altruism off and on.
PairResult run_pair(const ValidatedConfig& c);

enum class SweepParameter { kLThreshold, kAThreshold, kPAlt };

/// Accepts "L", "L_threshold", "A", "A_threshold", "P", "p_alt" (case-insensitive).
SweepParameter parse_sweep_parameter(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter p) noexcept;
ValidatedConfig with_parameter(const ValidatedConfig& base, SweepParameter p, double value);

std::vector<RunResult> sweep(const ValidatedConfig& base, SweepParameter p,
                             std::span<const double> values);

/// Like counts rebuilt from the Like events alone.
std::vector<std::uint32_t> replay_like_counts(const EventLog& log, std::size_t n_articles);

/// Per-category aggregates recomputed from the log and article table.
std::vector<CategoryAggregate> aggregate(const SimConfig& c,
                                         std::span<const Article> articles,
                                         const EventLog& log);

/// First violated log invariant, if any.
std::optional<std::string> check_event_log(const EventLog& log, std::size_t n_minor);

}  // namespace snsim
