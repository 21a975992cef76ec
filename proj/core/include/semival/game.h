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

#ifndef SEMIVAL_GAME_H_
#define SEMIVAL_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semival/coalition.h"
#include "semival/facility.h"

namespace semival {

// Exhaustive algorithms refuse to enumerate games with more players than
// this cap (2^24 coalition evaluations by default). Every such entry point
// takes the cap as a parameter, so callers can raise or lower it.
inline constexpr int kDefaultEnumerationCap = 24;

// Absolute tolerance for the structural assumption checks. All in-scope
// valuations are sums and maxes of their inputs, so no conditioning issues
// are expected beyond plain rounding.
inline constexpr double kDefaultTolerance = 1e-9;

enum class ValuationKind { kTable, kFacility, kCoverage, kSynthetic };

// A weighted-coverage game: each player covers a subset of a weighted
// universe and a coalition's value is the total weight it covers. Monotone
// and submodular by construction.
struct CoverageData {
  std::vector<double> element_weights;
  std::vector<std::vector<int>> covered;  // per player, element indices
};

// Parameters of the seeded synthetic generator. It draws a random coverage
// game (universe_size weighted elements, each covered by each player with
// probability cover_probability) and materializes its value table, yielding
// a deterministic monotone submodular game with v({}) = 0.
struct SyntheticParams {
  int universe_size = 0;  // 0 means 3 * n_players
  double cover_probability = 0.5;
  double weight_scale = 1.0;
};

// An immutable characteristic-function game: a player count plus one of the
// supported valuations. Copies share the underlying data; evaluation and
// every verifier below are safe to call concurrently.
class GameSpec {
 public:
  // `values` indexed by coalition bit pattern (coalition {0} at index 1);
  // size must be exactly 2^n.
  static GameSpec FromTable(int n_players, std::vector<double> values);
  static GameSpec FromFacility(UtilityMatrix m);
  static GameSpec FromCoverage(CoverageData data);
  static GameSpec Synthetic(int n_players, uint64_t seed,
                            const SyntheticParams& params = {});

  int n_players() const;
  ValuationKind kind() const;

  // Characteristic value of the coalition encoded by `mask`. Pure.
  double Value(uint64_t mask) const;

  // Underlying data; non-null only for the matching kind. Synthetic games
  // expose both their materialized table and their generator parameters.
  const std::vector<double>* table() const;
  const UtilityMatrix* facility() const;
  const CoverageData* coverage() const;

  struct SyntheticInfo {
    uint64_t seed;
    SyntheticParams params;
  };
  const SyntheticInfo* synthetic() const;

 private:
  struct Impl;
  explicit GameSpec(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// v(s); throws std::invalid_argument if s does not fit the game.
double Evaluate(const GameSpec& game, const Coalition& s);

// v(s + {player}) - v(s); requires player not in s.
double MarginalContribution(const GameSpec& game, int player,
                            const Coalition& s);

// All 2^n values in ascending bit-pattern order. CapacityError above the cap.
std::vector<double> ValueTable(const GameSpec& game,
                               int enumeration_cap = kDefaultEnumerationCap);

// z[c] = average marginal contribution of `player` toward the size-c
// coalitions of the other players.
struct MarginalProfile {
  int player = 0;
  std::vector<double> z;
};

// Exact enumeration; per size c the coalitions are accumulated in ascending
// bit-pattern order, which fixes the floating-point result.
MarginalProfile AverageMarginalProfile(
    const GameSpec& game, int player,
    int enumeration_cap = kDefaultEnumerationCap);

// Counterexample to a structural assumption: for submodularity, player's
// marginal contribution toward `inner` (a subset of `outer`) is smaller than
// toward `outer` by `slack`; for replication redundancy, `player` is the
// replica whose contribution toward `outer` (which contains another replica)
// is nonzero, with inner empty and inner_value 0.
struct AssumptionWitness {
  int player = 0;
  Coalition inner;
  Coalition outer;
  double inner_value = 0.0;
  double outer_value = 0.0;
  double slack = 0.0;
  std::string Describe() const;
};

struct AssumptionReport {
  bool holds = true;
  std::optional<AssumptionWitness> witness;
};

// Exhaustively checks the diminishing-returns inequality over all players
// and all nested coalition pairs S within S' (excluding the player). If it
// fails beyond the tolerance, the report carries a maximally violating pair.
AssumptionReport VerifySubmodularity(
    const GameSpec& game, double tolerance = kDefaultTolerance,
    int enumeration_cap = kDefaultEnumerationCap);

// Checks that every player in `replicas` contributes nothing to any
// coalition that already contains another member of `replicas`.
AssumptionReport VerifyReplicationRedundancy(
    const GameSpec& game, const std::vector<int>& replicas,
    double tolerance = kDefaultTolerance,
    int enumeration_cap = kDefaultEnumerationCap);

}  // namespace semival

#endif  // SEMIVAL_GAME_H_
