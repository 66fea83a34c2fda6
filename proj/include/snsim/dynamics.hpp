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
#include <stdexcept>

namespace snsim {

/// A viewer likes an article when evaluation x interest reaches the like
/// threshold (inclusive).
constexpr bool like_decision(int evaluation, double interest, double l_threshold) noexcept {
  return static_cast<double>(evaluation) * interest >= l_threshold;
}

struct AltruismInputs {
  int evaluation = 0;
  double interest = 0.0;
  /// Likes on the article including the acting agent's own; must be >= 1.
  std::uint32_t like_count = 1;
  bool hub = false;
  double a_threshold = 0.0;
  double p_alt = 1.0;
  /// Uniform draw in [0, 1) for the P(Alt) coin.
  double random_draw = 0.0;
};

inline constexpr int kAltruismMinEvaluation = 3;

/// Whether a liker re-shares: requires E >= 3, R * E * S / N >= A_threshold,
/// and the coin draw below p_alt. Throws std::invalid_argument on N == 0.
constexpr bool altruism_gate(const AltruismInputs& in) {
  if (in.like_count == 0)
    throw std::invalid_argument("altruism_gate: like_count must include the acting like");
  if (in.evaluation < kAltruismMinEvaluation) return false;
  const double hub = in.hub ? 1.0 : 0.0;
  const double damped = hub * (static_cast<double>(in.evaluation) * in.interest /
                               static_cast<double>(in.like_count));
  if (!(damped >= in.a_threshold)) return false;
  return in.random_draw < in.p_alt;
}

}  // namespace snsim
