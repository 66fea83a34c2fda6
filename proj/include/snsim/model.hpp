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
#include <stdexcept>
#include <string>
#include <vector>

namespace snsim {

/// Raised for invalid configuration or input; the message names the first
/// offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CategoryId = int;
using ArticleId = std::uint32_t;
using AgentId = std::uint32_t;

inline constexpr int kMinEvaluation = 0;
inline constexpr int kMaxEvaluation = 4;
inline constexpr int kEvaluationLevels = kMaxEvaluation - kMinEvaluation + 1;

/// One posting bucket. Ids are 1-based labels; `hub` marks articles of this
/// category as posted by the designated major agent (R_im = 1).
struct Category {
  CategoryId id = 0;
  double posting_weight = 0.0;
  bool hub = false;
  std::string label = "[R]";

  bool operator==(const Category&) const = default;
};

struct Article {
  ArticleId id = 0;
  CategoryId category = 0;
  AgentId poster = 0;
  int evaluation = 0;
  std::uint32_t step_posted = 0;
  std::uint32_t like_count = 0;
};

/// A viewer. `interest[k]` is the interest in the k-th configured category
/// (position in SimConfig::categories, not the category id).
struct MinorAgent {
  AgentId id = 0;
  std::vector<double> interest;
  std::vector<ArticleId> liked;
  std::vector<ArticleId> shared;
};

struct MajorAgent {
  AgentId id = 0;
  std::vector<double> category_weights;
};

struct KeywordConstraint {
  std::string term;
  double min_score = 0.0;

  bool operator==(const KeywordConstraint&) const = default;
};

/// Configuration-supplied filtering rule. The category pattern is an opaque
/// path label such as "[R][10][10]".
struct FilterRule {
  int id = 0;
  std::string category_pattern;
  int min_evaluation = 0;
  std::vector<KeywordConstraint> keywords;

  bool operator==(const FilterRule&) const = default;
};

struct InterestDistribution {
  std::string kind = "uniform";
  double s_max = 1.0;

  bool operator==(const InterestDistribution&) const = default;
};

struct SimConfig {
  std::uint32_t n_major = 200;
  std::uint32_t n_minor = 2000;
  std::uint32_t n_steps = 100;
  double l_threshold = 2.5;
  double a_threshold = 0.05;
  double p_alt = 1.0;
  bool altruism_enabled = true;
  std::vector<double> evaluation_distribution =
      std::vector<double>(kEvaluationLevels, 1.0 / kEvaluationLevels);
  InterestDistribution interest_distribution;
  std::uint32_t posts_per_major_per_step = 1;
  /// nullopt means every minor agent that has not yet viewed the article.
  std::optional<std::uint32_t> recommendation_fanout;
  double view_probability = 1.0;
  std::uint64_t seed = 1;
  std::vector<Category> categories = default_categories();
  std::vector<FilterRule> rules;

  bool operator==(const SimConfig&) const = default;

  /// Eleven filtering-rule categories. Rules 1 and 2 never fire; weights for
  /// 3..11 follow the article mix 5,2,3,1,1,3,11,20,9. Rules 9 and 10 are hubs.
  static std::vector<Category> default_categories();
};

/// A SimConfig that has passed validate_config. Only constructible there.
class ValidatedConfig {
 public:
  const SimConfig& get() const noexcept { return config_; }
  const SimConfig* operator->() const noexcept { return &config_; }

  /// Copy with one field changed, revalidated.
  template <typename Fn>
  ValidatedConfig with(Fn&& edit) const;

 private:
  explicit ValidatedConfig(SimConfig c) : config_(std::move(c)) {}
  friend ValidatedConfig validate_config(SimConfig c);
  SimConfig config_;
};

/// Returns the config iff every invariant holds; throws ConfigError otherwise.
ValidatedConfig validate_config(SimConfig c);

template <typename Fn>
ValidatedConfig ValidatedConfig::with(Fn&& edit) const {
  SimConfig copy = config_;
  edit(copy);
  return validate_config(std::move(copy));
}

/// Index of a category id within config.categories, or -1.
int category_index(const SimConfig& c, CategoryId id) noexcept;

}  // namespace snsim
