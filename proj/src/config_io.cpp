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

#include "snsim/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace snsim {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) throw ConfigError(where + "unknown key \"" + key + "\"");
  }
}

const json& object_at(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + "expected an object");
  return j;
}

template <typename T>
T get_as(const json& j, const std::string& name) {
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!j.is_boolean()) throw ConfigError(name + ": expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!j.is_number_integer()) throw ConfigError(name + ": expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)
          throw ConfigError(name + ": expected a non-negative integer");
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!j.is_number()) throw ConfigError(name + ": expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!j.is_string()) throw ConfigError(name + ": expected a string");
    }
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(name + ": " + e.what());
  }
}

template <typename T>
void read_if(const json& obj, const char* key, T& dst) {
  if (auto it = obj.find(key); it != obj.end()) dst = get_as<T>(*it, key);
}

Category parse_category(const json& j) {
  object_at(j, "categories: ");
  reject_unknown(j, {"id", "posting_weight", "hub", "label"}, "categories: ");
  Category c;
  if (!j.contains("id")) throw ConfigError("categories: missing \"id\"");
  c.id = get_as<int>(j.at("id"), "categories.id");
  read_if(j, "posting_weight", c.posting_weight);
  read_if(j, "hub", c.hub);
  read_if(j, "label", c.label);
  return c;
}

FilterRule parse_rule(const json& j) {
  object_at(j, "rules: ");
  reject_unknown(j, {"id", "category_pattern", "min_evaluation", "keywords"}, "rules: ");
  FilterRule r;
  if (!j.contains("id")) throw ConfigError("rules: missing \"id\"");
  r.id = get_as<int>(j.at("id"), "rules.id");
  read_if(j, "category_pattern", r.category_pattern);
  read_if(j, "min_evaluation", r.min_evaluation);
  if (auto it = j.find("keywords"); it != j.end()) {
    if (!it->is_array()) throw ConfigError("rules.keywords: expected an array");
    for (const json& kw : *it) {
      object_at(kw, "rules.keywords: ");
      reject_unknown(kw, {"term", "min_score"}, "rules.keywords: ");
      KeywordConstraint k;
      read_if(kw, "term", k.term);
      read_if(kw, "min_score", k.min_score);
      r.keywords.push_back(std::move(k));
    }
  }
  return r;
}

}  // namespace

SimConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  object_at(root, "config: ");
  reject_unknown(root,
                 {"n_major", "n_minor", "n_steps", "l_threshold", "a_threshold", "p_alt",
                  "altruism_enabled", "evaluation_distribution", "interest_distribution",
                  "posts_per_major_per_step", "recommendation_fanout", "view_probability",
                  "seed", "categories", "rules"},
                 "config: ");

  SimConfig c;
  read_if(root, "n_major", c.n_major);
  read_if(root, "n_minor", c.n_minor);
  read_if(root, "n_steps", c.n_steps);
  read_if(root, "l_threshold", c.l_threshold);
  read_if(root, "a_threshold", c.a_threshold);
  read_if(root, "p_alt", c.p_alt);
  read_if(root, "altruism_enabled", c.altruism_enabled);
  read_if(root, "posts_per_major_per_step", c.posts_per_major_per_step);
  read_if(root, "view_probability", c.view_probability);
  read_if(root, "seed", c.seed);

  if (auto it = root.find("evaluation_distribution"); it != root.end()) {
    if (!it->is_array()) throw ConfigError("evaluation_distribution: expected an array");
    c.evaluation_distribution.clear();
    for (const json& p : *it)
      c.evaluation_distribution.push_back(get_as<double>(p, "evaluation_distribution"));
  }
  if (auto it = root.find("interest_distribution"); it != root.end()) {
    object_at(*it, "interest_distribution: ");
    reject_unknown(*it, {"kind", "s_max"}, "interest_distribution: ");
    read_if(*it, "kind", c.interest_distribution.kind);
    read_if(*it, "s_max", c.interest_distribution.s_max);
  }
  if (auto it = root.find("recommendation_fanout"); it != root.end()) {
    if (it->is_string()) {
      if (it->get<std::string>() != "all-unseen")
        throw ConfigError("recommendation_fanout: expected \"all-unseen\" or a count");
      c.recommendation_fanout.reset();
    } else {
      c.recommendation_fanout = get_as<std::uint32_t>(*it, "recommendation_fanout");
    }
  }
  if (auto it = root.find("categories"); it != root.end()) {
    if (!it->is_array()) throw ConfigError("categories: expected an array");
    c.categories.clear();
    for (const json& cat : *it) c.categories.push_back(parse_category(cat));
  }
  if (auto it = root.find("rules"); it != root.end()) {
    if (!it->is_array()) throw ConfigError("rules: expected an array");
    for (const json& r : *it) c.rules.push_back(parse_rule(r));
  }
  return c;
}

std::string serialize_config(const SimConfig& c) {
  json root = json::object();
  root["n_major"] = c.n_major;
  root["n_minor"] = c.n_minor;
  root["n_steps"] = c.n_steps;
  root["l_threshold"] = c.l_threshold;
  root["a_threshold"] = c.a_threshold;
  root["p_alt"] = c.p_alt;
  root["altruism_enabled"] = c.altruism_enabled;
  root["evaluation_distribution"] = c.evaluation_distribution;
  root["interest_distribution"] = {{"kind", c.interest_distribution.kind},
                                   {"s_max", c.interest_distribution.s_max}};
  root["posts_per_major_per_step"] = c.posts_per_major_per_step;
  if (c.recommendation_fanout)
    root["recommendation_fanout"] = *c.recommendation_fanout;
  else
    root["recommendation_fanout"] = "all-unseen";
  root["view_probability"] = c.view_probability;
  root["seed"] = c.seed;
  json cats = json::array();
  for (const Category& cat : c.categories)
    cats.push_back({{"id", cat.id},
                    {"posting_weight", cat.posting_weight},
                    {"hub", cat.hub},
                    {"label", cat.label}});
  root["categories"] = std::move(cats);
  json rules = json::array();
  for (const FilterRule& r : c.rules) {
    json kws = json::array();
    for (const auto& kw : r.keywords)
      kws.push_back({{"term", kw.term}, {"min_score", kw.min_score}});
    rules.push_back({{"id", r.id},
                     {"category_pattern", r.category_pattern},
                     {"min_evaluation", r.min_evaluation},
                     {"keywords", std::move(kws)}});
  }
  root["rules"] = std::move(rules);
  return root.dump(2) + "\n";
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace snsim
