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

#ifndef SEMIVAL_SAMPLING_H_
#define SEMIVAL_SAMPLING_H_

#include <cstdint>
#include <vector>

#include "semival/coalition.h"
#include "semival/game.h"
#include "semival/weights.h"

namespace semival {

// Distribution over coalition sizes. The default is uniform over the
// interior sizes {1, ..., n-1}, since the empty and grand coalitions are
// appended deterministically to every batch anyway; explicit weights may
// still place mass on 0 or n.
class SizeDistribution {
 public:
  static SizeDistribution Uniform() { return SizeDistribution{}; }

  // weights[c] is the unnormalized probability of size c, c = 0..n; the
  // vector length must be n+1 when the batch is drawn.
  static SizeDistribution FromWeights(std::vector<double> weights);

  bool is_uniform() const { return weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Shared coalition samples with per-size means U[c] (c = 0..n) and
// per-player conditional means Ubar[i][c] (mean value of the size-c samples
// containing player i), each tracked with hit counts.
struct SampleBatch {
  int n_players = 0;
  std::vector<std::pair<Coalition, double>> samples;
  std::vector<double> size_sum;                 // [c]
  std::vector<int64_t> size_count;              // [c]
  std::vector<std::vector<double>> player_sum;  // [i][c]
  std::vector<std::vector<int64_t>> player_count;

  bool HasSizeMean(int c) const { return size_count[c] > 0; }
  double SizeMean(int c) const { return size_sum[c] / size_count[c]; }
  bool HasPlayerMean(int i, int c) const { return player_count[i][c] > 0; }
  double PlayerMean(int i, int c) const {
    return player_sum[i][c] / player_count[i][c];
  }
};

// Draws `budget` coalitions (size ~ q, members uniform without
// replacement), evaluates each once, then appends v({}) and v(N)
// deterministically. Deterministic given the seed.
SampleBatch DrawSamples(const GameSpec& game, int64_t budget,
                        const SizeDistribution& q, uint64_t seed);

// All 2^n coalitions once each, so every mean is its exact population value.
SampleBatch ExhaustiveBatch(const GameSpec& game,
                            int enumeration_cap = kDefaultEnumerationCap);

// phi_hat[i]: per-player estimate; phi_all: estimated total allocated
// payoff; phi_prime: phi_hat reconciled so that its sum equals phi_all.
struct EstimateSet {
  std::vector<double> phi_hat;
  double phi_all = 0.0;
  std::vector<double> phi_prime;
};

// The unbiased estimators
//   phi_hat_i  = sum_c alpha_c * (n/(n-c)) *
//                [ ((n-c)/n) Ubar_i(c+1) + (c/n) Ubar_i(c) - U_c ]
//   phi_all    = n * sum_c alpha_c * (U_{c+1} - U_c)
// Requires every (size, player) cell with a nonzero coefficient to be
// covered by the batch; throws CoverageError naming missing cells
// otherwise. phi_prime is left empty.
EstimateSet EstimatePayoffs(const SampleBatch& batch,
                            const WeightScheme& scheme);

// Closed-form solution of the reconciliation program: the returned phi'
// satisfies sum_i phi'_i = phi_all while preserving the pairwise
// differences delta[i][j]; with delta built as phi_hat_i - phi_hat_j this
// is phi_hat shifted uniformly. `delta` must be antisymmetric.
std::vector<double> ReconcileFeasibility(
    const EstimateSet& estimates,
    const std::vector<std::vector<double>>& delta);

// Draw, estimate, build pairwise differences from phi_hat, reconcile.
EstimateSet ApproximateSemivalue(const GameSpec& game,
                                 const WeightScheme& scheme, int64_t budget,
                                 const SizeDistribution& q, uint64_t seed);

// Same pipeline on the exhaustive batch; equals the exact semivalue.
EstimateSet ApproximateSemivalueExhaustive(
    const GameSpec& game, const WeightScheme& scheme,
    int enumeration_cap = kDefaultEnumerationCap);

}  // namespace semival

#endif  // SEMIVAL_SAMPLING_H_
