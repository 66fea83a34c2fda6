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

#include "snsim/engine.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "snsim/dynamics.hpp"

namespace snsim {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

KeyedUniform::KeyedUniform(std::uint64_t seed, Purpose purpose) noexcept
    : key_(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(purpose))) {}

std::uint64_t KeyedUniform::bits(ArticleId article, AgentId agent) const noexcept {
  const std::uint64_t pair = (std::uint64_t{article} << 32) | agent;
  return splitmix64(key_ ^ splitmix64(pair));
}

double KeyedUniform::operator()(ArticleId article, AgentId agent) const noexcept {
  return to_unit(bits(article, agent));
}

std::uint64_t RunResult::count(EventKind kind) const noexcept {
  return static_cast<std::uint64_t>(std::count_if(
      events.begin(), events.end(), [kind](const Event& e) { return e.kind == kind; }));
}

std::uint64_t RunResult::total_likes() const noexcept { return count(EventKind::kLike); }

namespace {

// Substream seeds for the sequential generators.
enum class Stream : std::uint64_t { kAgentInit = 11, kPosting = 12, kEvaluation = 13 };

std::mt19937_64 make_stream(std::uint64_t seed, Stream s) {
  return std::mt19937_64(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(s)));
}

// Index drawn with probability proportional to weights; zero weights are never chosen.
std::size_t sample_weighted(std::span<const double> weights, double total,
                            std::mt19937_64& rng) {
  const double target = to_unit(rng()) * total;
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cum += weights[i];
    last_positive = i;
    if (target < cum) return i;
  }
  return last_positive;
}

// Per-(article, agent) state for articles posted in the current step.
enum Exposure : std::uint8_t { kUnseen = 0, kViewed = 1, kLiked = 2, kShared = 3 };

}  // namespace

World init_world(const ValidatedConfig& vc) {
  const SimConfig& c = vc.get();
  const std::uint64_t seed = c.seed;
  World w{vc,
          0,
          {},
          {},
          {},
          {},
          make_stream(seed, Stream::kPosting),
          make_stream(seed, Stream::kEvaluation),
          KeyedUniform(seed, KeyedUniform::Purpose::kView),
          KeyedUniform(seed, KeyedUniform::Purpose::kCoin),
          KeyedUniform(seed, KeyedUniform::Purpose::kFanout)};

  std::vector<double> weights;
  for (const Category& cat : c.categories) weights.push_back(cat.posting_weight);
  w.majors.reserve(c.n_major);
  for (AgentId m = 0; m < c.n_major; ++m) w.majors.push_back({m, weights});

  auto init_rng = make_stream(seed, Stream::kAgentInit);
  const std::size_t k = c.categories.size();
  const double s_max = c.interest_distribution.s_max;
  w.minors.reserve(c.n_minor);
  for (AgentId j = 0; j < c.n_minor; ++j) {
    MinorAgent a;
    a.id = j;
    a.interest.resize(k);
    for (double& s : a.interest) s = to_unit(init_rng()) * s_max;
    w.minors.push_back(std::move(a));
  }
  return w;
}

void step(World& w) {
  const SimConfig& c = w.config.get();
  const auto step_no = w.step;
  const auto first_new = static_cast<ArticleId>(w.articles.size());

  for (const MajorAgent& m : w.majors) {
    const double total = std::accumulate(m.category_weights.begin(),
                                         m.category_weights.end(), 0.0);
    for (std::uint32_t p = 0; p < c.posts_per_major_per_step; ++p) {
      const auto k = sample_weighted(m.category_weights, total, w.posting_rng);
      const auto e = static_cast<int>(
          sample_weighted(c.evaluation_distribution, 1.0, w.evaluation_rng));
      const auto id = static_cast<ArticleId>(w.articles.size());
      w.articles.push_back({id, c.categories[k].id, m.id, e, step_no, 0});
      w.events.push_back({EventKind::kPost, LikeVia::kNone, step_no, m.id, id, 0});
    }
  }

  const std::size_t n_new = w.articles.size() - first_new;
  const std::size_t n_minor = w.minors.size();
  if (n_new == 0 || n_minor == 0) {
    ++w.step;
    return;
  }

  std::vector<std::size_t> cat_index(n_new);
  for (std::size_t i = 0; i < n_new; ++i)
    cat_index[i] = static_cast<std::size_t>(
        category_index(c, w.articles[first_new + i].category));

  std::vector<std::uint8_t> exposure(n_new * n_minor, kUnseen);
  auto state = [&](ArticleId a, AgentId j) -> std::uint8_t& {
    return exposure[(a - first_new) * n_minor + j];
  };

  struct Pending {
    ArticleId article;
    AgentId agent;
  };
  std::deque<Pending> queue;

  auto record_like = [&](ArticleId a, AgentId j, LikeVia via) {
    state(a, j) = kLiked;
    ++w.articles[a].like_count;
    w.minors[j].liked.push_back(a);
    w.events.push_back({EventKind::kLike, via, step_no, j, a, 0});
    queue.push_back({a, j});
  };

  auto view = [&](ArticleId a, AgentId j, LikeVia via) {
    state(a, j) = kViewed;
    const Article& art = w.articles[a];
    const double s = w.minors[j].interest[cat_index[a - first_new]];
    if (like_decision(art.evaluation, s, c.l_threshold)) record_like(a, j, via);
  };

  for (ArticleId a = first_new; a < w.articles.size(); ++a)
    for (AgentId j = 0; j < n_minor; ++j)
      if (w.view_draw(a, j) < c.view_probability) view(a, j, LikeVia::kOrganic);

  if (c.altruism_enabled) {
    std::vector<AgentId> recipients;
    while (!queue.empty()) {
      const auto [a, j] = queue.front();
      queue.pop_front();
      const Article& art = w.articles[a];
      const std::size_t ci = cat_index[a - first_new];
      const AltruismInputs in{art.evaluation,       w.minors[j].interest[ci],
                              art.like_count,       c.categories[ci].hub,
                              c.a_threshold,        c.p_alt,
                              w.coin_draw(a, j)};
      if (!altruism_gate(in)) continue;

      recipients.clear();
      for (AgentId r = 0; r < n_minor; ++r)
        if (state(a, r) == kUnseen) recipients.push_back(r);
      if (c.recommendation_fanout && recipients.size() > *c.recommendation_fanout) {
        std::mt19937_64 pick(w.fanout_draw.bits(a, j));
        const std::size_t keep = *c.recommendation_fanout;
        for (std::size_t i = 0; i < keep; ++i) {
          const std::size_t span = recipients.size() - i;
          const std::size_t r = i + static_cast<std::size_t>(to_unit(pick()) * span);
          std::swap(recipients[i], recipients[r]);
        }
        recipients.resize(keep);
        std::sort(recipients.begin(), recipients.end());
      }
      if (recipients.empty()) continue;

      state(a, j) = kShared;
      w.minors[j].shared.push_back(a);
      w.events.push_back({EventKind::kShare, LikeVia::kNone, step_no, j, a,
                          static_cast<std::uint32_t>(recipients.size())});
      for (AgentId r : recipients) view(a, r, LikeVia::kRecommendation);
    }
  }
  ++w.step;
}

std::vector<std::uint32_t> replay_like_counts(const EventLog& log, std::size_t n_articles) {
  std::vector<std::uint32_t> counts(n_articles, 0);
  for (const Event& e : log)
    if (e.kind == EventKind::kLike && e.article < n_articles) ++counts[e.article];
  return counts;
}

std::vector<CategoryAggregate> aggregate(const SimConfig& c,
                                         std::span<const Article> articles,
                                         const EventLog& log) {
  const std::size_t k = c.categories.size();
  std::vector<CategoryAggregate> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].category = c.categories[i].id;
  std::vector<std::size_t> index_of(articles.size());
  for (const Article& a : articles) {
    const auto ci = static_cast<std::size_t>(category_index(c, a.category));
    index_of[a.id] = ci;
    ++out[ci].articles;
  }
  std::vector<std::vector<bool>> liker(k, std::vector<bool>(c.n_minor, false));
  for (const Event& e : log) {
    if (e.kind != EventKind::kLike) continue;
    const std::size_t ci = index_of[e.article];
    ++out[ci].total_likes;
    if (!liker[ci][e.agent]) {
      liker[ci][e.agent] = true;
      ++out[ci].persons;
    }
  }
  return out;
}

RunResult finish(World&& w) {
  RunResult r;
  r.config = w.config.get();
  r.seed = r.config.seed;
  r.categories = aggregate(r.config, w.articles, w.events);
  r.events = std::move(w.events);
  r.articles = std::move(w.articles);
  return r;
}

RunResult run(const ValidatedConfig& c) {
  World w = init_world(c);
  for (std::uint32_t s = 0; s < c->n_steps; ++s) step(w);
  return finish(std::move(w));
}

PairResult run_pair(const ValidatedConfig& c) {
  PairResult out;
  out.without_altruism = run(c.with([](SimConfig& s) { s.altruism_enabled = false; }));
  out.with_altruism = run(c.with([](SimConfig& s) { s.altruism_enabled = true; }));
  return out;
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "l" || lower == "l_threshold") return SweepParameter::kLThreshold;
  if (lower == "a" || lower == "a_threshold") return SweepParameter::kAThreshold;
  if (lower == "p" || lower == "p_alt") return SweepParameter::kPAlt;
  throw ConfigError("unknown sweep parameter \"" + std::string(name) +
                    "\" (expected L, A or P)");
}

std::string_view sweep_parameter_name(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::kLThreshold: return "L";
    case SweepParameter::kAThreshold: return "A";
    case SweepParameter::kPAlt: return "P";
  }
  return "?";
}

ValidatedConfig with_parameter(const ValidatedConfig& base, SweepParameter p, double value) {
  return base.with([&](SimConfig& s) {
    switch (p) {
      case SweepParameter::kLThreshold: s.l_threshold = value; break;
      case SweepParameter::kAThreshold: s.a_threshold = value; break;
      case SweepParameter::kPAlt: s.p_alt = value; break;
    }
  });
}

std::vector<RunResult> sweep(const ValidatedConfig& base, SweepParameter p,
                             std::span<const double> values) {
  // Validate the whole grid before spending time on any run.
  std::vector<ValidatedConfig> grid;
  grid.reserve(values.size());
  for (double v : values) grid.push_back(with_parameter(base, p, v));
  std::vector<RunResult> out;
  out.reserve(grid.size());
  for (const auto& c : grid) out.push_back(run(c));
  return out;
}

std::optional<std::string> check_event_log(const EventLog& log, std::size_t n_minor) {
  std::set<ArticleId> posted;
  std::set<std::pair<AgentId, ArticleId>> likes;
  std::set<std::pair<AgentId, ArticleId>> shares;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const Event& e = log[i];
    const std::string at = "event " + std::to_string(i) + ": ";
    switch (e.kind) {
      case EventKind::kPost:
        if (!posted.insert(e.article).second) return at + "article posted twice";
        break;
      case EventKind::kLike:
        if (!posted.count(e.article)) return at + "like before post";
        if (e.agent >= n_minor) return at + "unknown minor agent";
        if (!likes.insert({e.agent, e.article}).second) return at + "duplicate like";
        break;
      case EventKind::kShare:
        if (!likes.count({e.agent, e.article})) return at + "share without prior like";
        if (!shares.insert({e.agent, e.article}).second) return at + "duplicate share";
        if (e.recipients == 0) return at + "share with no recipients";
        break;
    }
  }
  return std::nullopt;
}

}  // namespace snsim
