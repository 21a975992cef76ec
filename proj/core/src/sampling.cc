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

#include "semival/sampling.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "semival/errors.h"
#include "semival/rng.h"

namespace semival {

namespace {

SampleBatch NewBatch(int n) {
  SampleBatch batch;
  batch.n_players = n;
  batch.size_sum.assign(n + 1, 0.0);
  batch.size_count.assign(n + 1, 0);
  batch.player_sum.assign(n, std::vector<double>(n + 1, 0.0));
  batch.player_count.assign(n, std::vector<int64_t>(n + 1, 0));
  return batch;
}

void Accumulate(SampleBatch* batch, const Coalition& s, double value) {
  batch->samples.emplace_back(s, value);
  const int c = s.size();
  batch->size_sum[c] += value;
  batch->size_count[c] += 1;
  for (int i : s.Members()) {
    batch->player_sum[i][c] += value;
    batch->player_count[i][c] += 1;
  }
}

}  // namespace

SizeDistribution SizeDistribution::FromWeights(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument(
          "SizeDistribution: weights must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw std::invalid_argument("SizeDistribution: weights must not all be 0");
  }
  SizeDistribution q;
  q.weights_ = std::move(weights);
  return q;
}

SampleBatch DrawSamples(const GameSpec& game, int64_t budget,
                        const SizeDistribution& q, uint64_t seed) {
  const int n = game.n_players();
  if (budget < 1) {
    throw std::invalid_argument("DrawSamples: budget must be >= 1");
  }
  std::vector<double> cumulative;  // over sizes 0..n
  if (!q.is_uniform()) {
    if (q.weights().size() != static_cast<size_t>(n + 1)) {
      throw std::invalid_argument(
          "DrawSamples: size distribution needs n+1 weights (sizes 0..n)");
    }
    cumulative = q.weights();
    for (size_t c = 1; c < cumulative.size(); ++c) {
      cumulative[c] += cumulative[c - 1];
    }
  }

  SampleBatch batch = NewBatch(n);
  Rng rng(seed);
  const bool drawable = !q.is_uniform() || n >= 2;
  if (drawable) {
    for (int64_t t = 0; t < budget; ++t) {
      int c;
      if (q.is_uniform()) {
        c = static_cast<int>(rng.NextInt(1, n - 1));
      } else {
        const double u = rng.NextUnit() * cumulative.back();
        c = 0;
        while (c < n && u >= cumulative[c]) ++c;
      }
      const std::vector<int> members = rng.SampleWithoutReplacement(n, c);
      const Coalition s = Coalition::FromIndices(members, n);
      Accumulate(&batch, s, game.Value(s.bits()));
    }
  }
  const Coalition empty = Coalition::Empty(n);
  const Coalition grand = Coalition::Grand(n);
  Accumulate(&batch, empty, game.Value(empty.bits()));
  Accumulate(&batch, grand, game.Value(grand.bits()));
  return batch;
}

SampleBatch ExhaustiveBatch(const GameSpec& game, int enumeration_cap) {
  const int n = game.n_players();
  const std::vector<double> values = ValueTable(game, enumeration_cap);
  SampleBatch batch = NewBatch(n);
  for (uint64_t mask = 0; mask < values.size(); ++mask) {
    Accumulate(&batch, Coalition(mask, n), values[mask]);
  }
  return batch;
}

EstimateSet EstimatePayoffs(const SampleBatch& batch,
                            const WeightScheme& scheme) {
  const int n = batch.n_players;
  const ImportanceWeights weights = ComputeImportanceWeights(scheme, n);

  std::ostringstream missing;
  auto require_size = [&](int c) {
    if (!batch.HasSizeMean(c)) missing << " U(c=" << c << ")";
  };
  auto require_player = [&](int i, int c) {
    if (!batch.HasPlayerMean(i, c)) {
      missing << " Ubar(i=" << i << ",c=" << c << ")";
    }
  };
  for (int c = 0; c < n; ++c) {
    if (weights.alpha[c] == 0.0) continue;
    require_size(c);
    require_size(c + 1);
    for (int i = 0; i < n; ++i) {
      require_player(i, c + 1);
      if (c > 0) require_player(i, c);  // the c=0 term has coefficient 0
    }
  }
  if (!missing.str().empty()) {
    throw CoverageError("EstimatePayoffs: batch does not cover" +
                        missing.str());
  }

  EstimateSet est;
  est.phi_hat.assign(n, 0.0);
  for (int c = 0; c < n; ++c) {
    const double alpha = weights.alpha[c];
    if (alpha == 0.0) continue;
    const double u_c = batch.SizeMean(c);
    est.phi_all += n * alpha * (batch.SizeMean(c + 1) - u_c);
    const double blow_up = static_cast<double>(n) / (n - c);
    for (int i = 0; i < n; ++i) {
      const double ubar_next = batch.PlayerMean(i, c + 1);
      const double ubar_here = c > 0 ? batch.PlayerMean(i, c) : 0.0;
      est.phi_hat[i] +=
          alpha * blow_up *
          ((static_cast<double>(n - c) / n) * ubar_next +
           (static_cast<double>(c) / n) * ubar_here - u_c);
    }
  }
  return est;
}

std::vector<double> ReconcileFeasibility(
    const EstimateSet& estimates,
    const std::vector<std::vector<double>>& delta) {
  const size_t n = estimates.phi_hat.size();
  if (delta.size() != n) {
    throw std::invalid_argument("ReconcileFeasibility: delta size mismatch");
  }
  for (size_t i = 0; i < n; ++i) {
    if (delta[i].size() != n) {
      throw std::invalid_argument("ReconcileFeasibility: delta not square");
    }
    for (size_t j = 0; j < n; ++j) {
      if (std::abs(delta[i][j] + delta[j][i]) > 1e-9) {
        throw std::invalid_argument(
            "ReconcileFeasibility: delta must be antisymmetric");
      }
    }
  }
  std::vector<double> phi_prime(n);
  for (size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (size_t j = 0; j < n; ++j) row += delta[i][j];
    phi_prime[i] = row / n + estimates.phi_all / n;
  }
  return phi_prime;
}

EstimateSet ApproximateSemivalue(const GameSpec& game,
                                 const WeightScheme& scheme, int64_t budget,
                                 const SizeDistribution& q, uint64_t seed) {
  const SampleBatch batch = DrawSamples(game, budget, q, seed);
  EstimateSet est = EstimatePayoffs(batch, scheme);
  const size_t n = est.phi_hat.size();
  std::vector<std::vector<double>> delta(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      delta[i][j] = est.phi_hat[i] - est.phi_hat[j];
    }
  }
  est.phi_prime = ReconcileFeasibility(est, delta);
  return est;
}

EstimateSet ApproximateSemivalueExhaustive(const GameSpec& game,
                                           const WeightScheme& scheme,
                                           int enumeration_cap) {
  const SampleBatch batch = ExhaustiveBatch(game, enumeration_cap);
  EstimateSet est = EstimatePayoffs(batch, scheme);
  const size_t n = est.phi_hat.size();
  std::vector<std::vector<double>> delta(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      delta[i][j] = est.phi_hat[i] - est.phi_hat[j];
    }
  }
  est.phi_prime = ReconcileFeasibility(est, delta);
  return est;
}

}  // namespace semival
