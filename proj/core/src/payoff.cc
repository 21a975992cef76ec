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

#include "semival/payoff.h"

#include <bit>
#include <stdexcept>

namespace semival {

double ProfilePayoff(std::span<const double> z, const WeightScheme& scheme) {
  const int n = static_cast<int>(z.size());
  if (n < 1) throw std::invalid_argument("ProfilePayoff: empty profile");
  const ImportanceWeights weights = ComputeImportanceWeights(scheme, n);
  double payoff = 0.0;
  for (int c = 0; c < n; ++c) payoff += weights.alpha[c] * z[c];
  return payoff;
}

double ExactPayoff(const GameSpec& game, const WeightScheme& scheme,
                   int player, int enumeration_cap) {
  const MarginalProfile profile =
      AverageMarginalProfile(game, player, enumeration_cap);
  return ProfilePayoff(profile.z, scheme);
}

std::vector<double> ExactPayoffsAll(const GameSpec& game,
                                    const WeightScheme& scheme,
                                    int enumeration_cap) {
  const int n = game.n_players();
  const std::vector<double> values = ValueTable(game, enumeration_cap);
  const size_t size = size_t{1} << n;

  // z_sum[i][c] accumulated over ascending masks, matching
  // AverageMarginalProfile's summation order per player.
  std::vector<std::vector<double>> z_sum(n, std::vector<double>(n, 0.0));
  for (uint64_t mask = 0; mask < size; ++mask) {
    const int c = std::popcount(mask);
    for (int i = 0; i < n; ++i) {
      const uint64_t bit = uint64_t{1} << i;
      if (mask & bit) continue;
      z_sum[i][c] += values[mask | bit] - values[mask];
    }
  }
  const ImportanceWeights weights = ComputeImportanceWeights(scheme, n);
  std::vector<double> payoffs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) {
      const double z = z_sum[i][c] / BinomialCoefficient(n - 1, c);
      payoffs[i] += weights.alpha[c] * z;
    }
  }
  return payoffs;
}

}  // namespace semival
