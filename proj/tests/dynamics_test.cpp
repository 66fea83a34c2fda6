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

#include "snsim/dynamics.hpp"

#include <random>

#include "doctest.h"

using namespace snsim;

TEST_CASE("like_decision examples") {
  CHECK(like_decision(3, 0.9, 2.5));
  CHECK_FALSE(like_decision(0, 1.0, 0.5));
  // 4 * 0.625 is exactly 2.5: inclusive comparison.
  CHECK(like_decision(4, 0.625, 2.5));
  CHECK_FALSE(like_decision(4, 0.6249999, 2.5));
}

TEST_CASE("altruism_gate examples") {
  AltruismInputs base{4, 1.0, 1, true, 0.05, 1.0, 0.0};
  CHECK(altruism_gate(base));

  auto low_eval = base;
  for (int e = 0; e < 3; ++e) {
    low_eval.evaluation = e;
    CHECK_FALSE(altruism_gate(low_eval));
  }

  auto not_hub = base;
  not_hub.hub = false;
  CHECK_FALSE(altruism_gate(not_hub));

  auto crowded = base;
  crowded.interest = 0.5;
  crowded.like_count = 80;  // 2 / 80 = 0.025 < 0.05
  CHECK_FALSE(altruism_gate(crowded));
  crowded.like_count = 40;  // 2 / 40 = 0.05, inclusive
  CHECK(altruism_gate(crowded));

  auto coin = base;
  coin.p_alt = 0.3;
  coin.random_draw = 0.3;
  CHECK_FALSE(altruism_gate(coin));
  coin.random_draw = 0.2999;
  CHECK(altruism_gate(coin));
}

TEST_CASE("altruism_gate rejects a zero like count") {
  AltruismInputs in{4, 1.0, 0, true, 0.05, 1.0, 0.0};
  CHECK_THROWS_AS(altruism_gate(in), std::invalid_argument);
}

namespace {

AltruismInputs random_inputs(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> eval(0, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> likes(1, 200);
  return {eval(rng), unit(rng), likes(rng), unit(rng) < 0.7, unit(rng) * 0.2,
          unit(rng), unit(rng)};
}

}  // namespace

TEST_CASE("like_decision is monotone in the threshold") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> eval(0, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const int e = eval(rng);
    const double s = unit(rng);
    double l1 = unit(rng) * 5.0, l2 = unit(rng) * 5.0;
    if (l1 > l2) std::swap(l1, l2);
    if (like_decision(e, s, l2)) CHECK(like_decision(e, s, l1));
  }
}

TEST_CASE("altruism_gate is monotone in A and damped in N") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> likes(1, 200);
  for (int i = 0; i < 20000; ++i) {
    AltruismInputs in = random_inputs(rng);

    auto hi_a = in;
    auto lo_a = in;
    hi_a.a_threshold = std::max(in.a_threshold, unit(rng) * 0.2);
    lo_a.a_threshold = std::min(in.a_threshold, hi_a.a_threshold * unit(rng));
    if (altruism_gate(hi_a)) CHECK(altruism_gate(lo_a));

    auto many = in;
    auto few = in;
    many.like_count = std::max(in.like_count, likes(rng));
    few.like_count = 1 + static_cast<std::uint32_t>(unit(rng) * (many.like_count - 1));
    if (altruism_gate(many)) CHECK(altruism_gate(few));

    auto never = in;
    never.p_alt = 0.0;
    CHECK_FALSE(altruism_gate(never));
  }
}
