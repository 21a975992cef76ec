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

#ifndef SEMIVAL_REPLICATION_H_
#define SEMIVAL_REPLICATION_H_

#include <span>
#include <vector>

#include "semival/game.h"
#include "semival/weights.h"

namespace semival {

// Tolerance for prefix-sum comparisons on importance weights. The weights
// are exact rationals evaluated in double precision and the gaps in every
// verdict below are Theta(1/n), far above rounding noise.
inline constexpr double kPrefixSumTolerance = 1e-12;

// A malicious player acting as k+1 identities, each holding a copy of its
// resource. The original index is reused as replica 0; the k added replicas
// occupy indices n, n+1, ..., n+k-1 of the induced game, so honest players
// keep their indices.
struct ReplicationScenario {
  GameSpec base;
  int malicious = 0;
  int replicas = 0;  // k, the number of *added* identities
};

// The induced game on n+k players: any coalition containing at least one
// replica is worth what the same honest players plus the original would be
// worth in the base game. Replication redundancy holds by construction.
// Facility and coverage games are induced structurally (duplicated rows /
// duplicated covered sets); table-backed games materialize the induced
// table, which requires n+k within the enumeration cap.
GameSpec InduceReplication(const ReplicationScenario& scenario,
                           int enumeration_cap = kDefaultEnumerationCap);

// Importance weights governing the attacker's total payoff after k
// replications: alpha_c^k = (k+1) * C(n-1, c) * w(c, n+k), for c = 0..n-1.
// k = 0 reduces to ComputeImportanceWeights.
std::vector<double> ReplicatedImportanceWeights(const WeightScheme& scheme,
                                                int n_players, int replicas);

// Total payoff of the k+1 replicas expressed on the base game's marginal
// profile: sum over c of alpha_c^k * z[c].
double TotalPayoffFromProfile(std::span<const double> z,
                              const WeightScheme& scheme, int replicas);

// curve[k] = attacker's total payoff after k replications, k = 0..k_max.
// The profile is computed once on the base game.
std::vector<double> TotalPayoffCurve(
    const GameSpec& base, int player, const WeightScheme& scheme, int k_max,
    int enumeration_cap = kDefaultEnumerationCap);

// Change in total payoff from a single replication (k=1), for Shapley or
// Banzhaf. The Shapley closed form sums (n-2|S|-1)-weighted marginal
// contributions; Banzhaf returns exactly 0. Both are cross-checked against
// the curve difference within 1e-9.
double DeltaSingleReplication(const GameSpec& game, const WeightScheme& scheme,
                              int player,
                              int enumeration_cap = kDefaultEnumerationCap);

enum class RobustnessMode {
  kIffCondition,      // prefix(alpha^0) >= prefix(alpha^k) for all k, p
  kMonotoneDecrease,  // prefix(alpha^k) >= prefix(alpha^{k+1})
  kMonotoneIncrease,  // prefix(alpha^{k+1}) >= prefix(alpha^k)
};

struct PrefixViolation {
  int k = 0;  // the replication count whose prefix sum wins over the lhs
  int p = 0;  // prefix index
  double lhs = 0.0;
  double rhs = 0.0;
};

// `robust` reports whether the mode's prefix condition held everywhere on
// the tested (k, p) grid; for kIffCondition that is exactly replication
// robustness. Every recorded violation satisfies lhs < rhs - tolerance.
struct RobustnessVerdict {
  bool robust = true;
  RobustnessMode mode = RobustnessMode::kIffCondition;
  std::vector<PrefixViolation> failing;
};

RobustnessVerdict CheckRobustness(const WeightScheme& scheme, int n_players,
                                  int k_max, RobustnessMode mode,
                                  double tolerance = kPrefixSumTolerance);

// The three structural properties of the Shapley replicated weights:
// unit sum for every k, prefix sums non-decreasing in k, and diminishing
// prefix-sum increments.
struct WeightPropertyReport {
  bool sums_to_one = true;
  bool prefix_monotone = true;
  bool increments_diminishing = true;
  double max_abs_violation = 0.0;
};

WeightPropertyReport ShapleyWeightProperties(
    int n_players, int k_max, double tolerance = kPrefixSumTolerance);

// Limit of the attacker's total payoff as k grows: v({i}) - v({}) for
// Shapley; 0 for Banzhaf, Leave-one-out and Robust Shapley (their weights
// vanish uniformly). NotDerivedError for Custom schemes.
double LimitTotalPayoff(const GameSpec& game, const WeightScheme& scheme,
                        int player,
                        int enumeration_cap = kDefaultEnumerationCap);

// Robust Shapley guarantees the attacker loses at least
// (1/n) * sum_c (1 - (k+1)/2^k) * gamma_n^c * z[c] by replicating k times.
struct LossBound {
  double actual_loss = 0.0;
  double bound = 0.0;
};

LossBound RobustShapleyLossBound(const GameSpec& game, int player,
                                 int replicas,
                                 int enumeration_cap = kDefaultEnumerationCap);

// Extra payoff an attacker can extract by perturbing its replicas (e.g.
// noising them to evade duplicate detection), against the induced exact
// replication. Requires, within epsilon: every perturbed replica matching
// the original's marginal contributions toward honest coalitions, and
// cross-replica marginal contributions at most epsilon. Throws
// AssumptionError naming the offending coalition otherwise. The gain never
// exceeds (k+1) * epsilon.
struct PerturbationGain {
  double gain = 0.0;
  double bound = 0.0;
};

PerturbationGain PerturbationGainBound(
    const ReplicationScenario& scenario, const WeightScheme& scheme,
    double epsilon, const GameSpec& perturbed_game,
    int enumeration_cap = kDefaultEnumerationCap);

}  // namespace semival

#endif  // SEMIVAL_REPLICATION_H_
