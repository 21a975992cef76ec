// Copyright 2026 The Semival Authors
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

#ifndef SEMIVAL_PAYOFF_H_
#define SEMIVAL_PAYOFF_H_

#include <span>
#include <vector>

#include "semival/game.h"
#include "semival/weights.h"

namespace semival {

// Payoff of a player whose average marginal contributions are z:
// sum over c of alpha_c * z[c], with n inferred from z.size(). This is the
// size-grouped form of the per-coalition sum and equals it exactly.
double ProfilePayoff(std::span<const double> z, const WeightScheme& scheme);

// Exact semivalue payoff of one player, by full enumeration.
double ExactPayoff(const GameSpec& game, const WeightScheme& scheme,
                   int player, int enumeration_cap = kDefaultEnumerationCap);

// Exact payoffs of every player from a single enumeration pass over the
// value table. Per player, coalitions of each size are accumulated in
// ascending bit-pattern order, so entries agree bit-for-bit with
// ExactPayoff / AverageMarginalProfile.
std::vector<double> ExactPayoffsAll(
    const GameSpec& game, const WeightScheme& scheme,
    int enumeration_cap = kDefaultEnumerationCap);

}  // namespace semival

#endif  // SEMIVAL_PAYOFF_H_
