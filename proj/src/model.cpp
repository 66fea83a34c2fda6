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

#include "snsim/model.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace snsim {

std::vector<Category> SimConfig::default_categories() {
  static constexpr double kWeights[] = {0, 0, 5, 2, 3, 1, 1, 3, 11, 20, 9};
  std::vector<Category> out;
  for (int k = 0; k < 11; ++k) {
    const int id = k + 1;
    out.push_back({id, kWeights[k], id == 9 || id == 10, "[R]"});
  }
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

ValidatedConfig validate_config(SimConfig c) {
  require(std::isfinite(c.l_threshold) && c.l_threshold >= 0.0,
          "l_threshold must be finite and >= 0");
  require(std::isfinite(c.a_threshold) && c.a_threshold > 0.0,
          "a_threshold must be finite and > 0");
  require(std::isfinite(c.p_alt) && c.p_alt >= 0.0 && c.p_alt <= 1.0,
          "p_alt out of [0,1]");
  require(std::isfinite(c.view_probability) && c.view_probability >= 0.0 &&
              c.view_probability <= 1.0,
          "view_probability out of [0,1]");

  require(c.evaluation_distribution.size() == kEvaluationLevels,
          "evaluation_distribution must have 5 entries (evaluations 0..4)");
  double total = 0.0;
  for (double p : c.evaluation_distribution) {
    require(std::isfinite(p) && p >= 0.0,
            "evaluation_distribution entries must be finite and >= 0");
    total += p;
  }
  require(std::abs(total - 1.0) <= 1e-12, "evaluation_distribution must sum to 1");

  require(c.interest_distribution.kind == "uniform",
          "interest_distribution.kind must be \"uniform\"");
  require(std::isfinite(c.interest_distribution.s_max) &&
              c.interest_distribution.s_max > 0.0,
          "interest_distribution.s_max must be finite and > 0");

  require(!c.categories.empty(), "categories must not be empty");
  std::set<CategoryId> ids;
  bool any_positive = false;
  for (const Category& cat : c.categories) {
    require(ids.insert(cat.id).second,
            "categories: duplicate id " + std::to_string(cat.id));
    require(std::isfinite(cat.posting_weight) && cat.posting_weight >= 0.0,
            "categories: posting_weight of category " + std::to_string(cat.id) +
                " must be finite and >= 0");
    any_positive = any_positive || cat.posting_weight > 0.0;
  }
  require(any_positive, "categories: at least one posting_weight must be > 0");

  const std::uint64_t n_articles = std::uint64_t{c.n_major} *
                                   c.posts_per_major_per_step * c.n_steps;
  require(n_articles < std::numeric_limits<ArticleId>::max(),
          "n_major * posts_per_major_per_step * n_steps overflows article ids");

  std::set<int> rule_ids;
  for (const FilterRule& r : c.rules) {
    require(rule_ids.insert(r.id).second,
            "rules: duplicate id " + std::to_string(r.id));
    require(r.min_evaluation >= kMinEvaluation && r.min_evaluation <= kMaxEvaluation,
            "rules: min_evaluation of rule " + std::to_string(r.id) +
                " out of [0,4]");
    for (const auto& kw : r.keywords) {
      require(!kw.term.empty(), "rules: empty keyword term in rule " +
                                    std::to_string(r.id));
      require(std::isfinite(kw.min_score),
              "rules: keyword min_score must be finite");
    }
  }
  return ValidatedConfig(std::move(c));
}

int category_index(const SimConfig& c, CategoryId id) noexcept {
  for (std::size_t i = 0; i < c.categories.size(); ++i)
    if (c.categories[i].id == id) return static_cast<int>(i);
  return -1;
}

}  // namespace snsim
