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

#include <filesystem>
#include <string>
#include <string_view>

#include "snsim/model.hpp"

namespace snsim {

// Configuration files are a single JSON object. Every key is optional and
// defaults to the SimConfig default; unknown keys are rejected.
//
//   n_major, n_minor, n_steps, posts_per_major_per_step   unsigned integers
//   l_threshold, a_threshold, p_alt, view_probability      numbers
//   altruism_enabled                                       boolean
//   evaluation_distribution                                5 numbers, E = 0..4
//   interest_distribution   {"kind": "uniform", "s_max": number}
//   recommendation_fanout   "all-unseen" or unsigned integer
//   seed                    unsigned 64-bit integer
//   categories              [{"id", "posting_weight", "hub", "label"}]
//   rules                   [{"id", "category_pattern", "min_evaluation",
//                             "keywords": [{"term", "min_score"}]}]
//
// Parsing checks types only; call validate_config for the value invariants.

SimConfig parse_config(std::string_view json_text);
std::string serialize_config(const SimConfig& c);
SimConfig load_config(const std::filesystem::path& path);

}  // namespace snsim
