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

#include "semival/game.h"

#include <cmath>

#include "gtest/gtest.h"
#include "semival/errors.h"
#include "semival/rng.h"
#include "test_util.h"

namespace semival {
namespace {

using testing_util::ExampleThreePlayerGame;
using testing_util::RandomSubmodularGame;
using testing_util::RandomTableGame;
using testing_util::TinyFacilityGame;

TEST(GameSpecTest, FacilityEvaluation) {
  const GameSpec game = TinyFacilityGame();
  EXPECT_DOUBLE_EQ(Evaluate(game, Coalition::Of({0}, 2)), 2.0);
  EXPECT_DOUBLE_EQ(Evaluate(game, Coalition::Empty(2)), 0.0);
  EXPECT_DOUBLE_EQ(Evaluate(game, Coalition::Of({0, 1}, 2)), 2.0);
  EXPECT_DOUBLE_EQ(Evaluate(game, Coalition::Of({1}, 2)), 1.0);
}

TEST(GameSpecTest, EvaluateIsDeterministic) {
  Rng rng(11);
  const GameSpec game = RandomSubmodularGame(rng, 6);
  for (uint64_t mask = 0; mask < 64; ++mask) {
    EXPECT_EQ(game.Value(mask), game.Value(mask));
  }
}

TEST(GameSpecTest, EvaluateRejectsForeignCoalition) {
  const GameSpec game = TinyFacilityGame();
  EXPECT_THROW(Evaluate(game, Coalition::Of({2}, 3)), std::invalid_argument);
}

TEST(GameSpecTest, TableMustHavePowerOfTwoSize) {
  EXPECT_THROW(GameSpec::FromTable(2, {0.0, 1.0, 2.0}), std::invalid_argument);
  EXPECT_NO_THROW(GameSpec::FromTable(2, {0.0, 1.0, 2.0, 3.0}));
}

TEST(GameSpecTest, ValueTableMatchesPointEvaluation) {
  Rng rng(5);
  for (const GameSpec& game :
       {TinyFacilityGame(), RandomSubmodularGame(rng, 5),
        GameSpec::FromCoverage(
            {{1.0, 2.0, 3.0}, {{0, 1}, {1, 2}, {2}}})}) {
    const std::vector<double> table = ValueTable(game);
    for (uint64_t mask = 0; mask < table.size(); ++mask) {
      EXPECT_NEAR(table[mask], game.Value(mask), 1e-12);
    }
  }
}

TEST(GameSpecTest, SyntheticIsSeedDeterministic) {
  const GameSpec a = GameSpec::Synthetic(6, 99);
  const GameSpec b = GameSpec::Synthetic(6, 99);
  const GameSpec c = GameSpec::Synthetic(6, 100);
  EXPECT_EQ(*a.table(), *b.table());
  EXPECT_NE(*a.table(), *c.table());
  EXPECT_EQ(a.Value(0), 0.0);
}

TEST(MarginalContributionTest, FacilityExamples) {
  const GameSpec game = TinyFacilityGame();
  EXPECT_DOUBLE_EQ(MarginalContribution(game, 0, Coalition::Empty(2)), 2.0);
  EXPECT_DOUBLE_EQ(MarginalContribution(game, 0, Coalition::Of({1}, 2)), 1.0);
  EXPECT_THROW(MarginalContribution(game, 0, Coalition::Of({0}, 2)),
               std::invalid_argument);
}

TEST(MarginalContributionTest, NullPlayerContributesNothing) {
  // Player 2 adds nothing anywhere.
  GameSpec game = GameSpec::FromCoverage({{1.0, 4.0}, {{0}, {1}, {}}});
  for (uint64_t mask = 0; mask < 8; ++mask) {
    if (mask & 4) continue;
    EXPECT_DOUBLE_EQ(
        MarginalContribution(game, 2, Coalition(mask, 3)), 0.0);
  }
}

TEST(AverageMarginalProfileTest, ExampleTwoProfile) {
  const MarginalProfile profile =
      AverageMarginalProfile(ExampleThreePlayerGame(), 0);
  ASSERT_EQ(profile.z.size(), 3u);
  EXPECT_DOUBLE_EQ(profile.z[0], 3.0);
  EXPECT_DOUBLE_EQ(profile.z[1], 2.0);
  EXPECT_DOUBLE_EQ(profile.z[2], 1.0);
}

TEST(AverageMarginalProfileTest, TinyFacilityProfile) {
  const MarginalProfile profile =
      AverageMarginalProfile(TinyFacilityGame(), 0);
  EXPECT_DOUBLE_EQ(profile.z[0], 2.0);
  EXPECT_DOUBLE_EQ(profile.z[1], 1.0);
}

TEST(AverageMarginalProfileTest, SinglePlayerGame) {
  const GameSpec game = GameSpec::FromTable(1, {0.0, 5.0});
  const MarginalProfile profile = AverageMarginalProfile(game, 0);
  ASSERT_EQ(profile.z.size(), 1u);
  EXPECT_DOUBLE_EQ(profile.z[0], 5.0);
}

TEST(AverageMarginalProfileTest, MatchesFreshEnumerationBitForBit) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.NextInt(0, 6));
    const GameSpec game = RandomTableGame(rng, n);
    for (int i = 0; i < n; ++i) {
      const MarginalProfile profile = AverageMarginalProfile(game, i);
      const std::vector<double> fresh =
          testing_util::BruteForceProfile(game, i);
      for (int c = 0; c < n; ++c) {
        EXPECT_EQ(profile.z[c], fresh[c])
            << "n=" << n << " i=" << i << " c=" << c;
      }
    }
  }
}

// On games that pass the submodularity check, every player's profile is
// non-increasing in the coalition size.
TEST(AverageMarginalProfileTest, NonIncreasingOnSubmodularGames) {
  Rng rng(131);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.NextInt(0, 5));
    const GameSpec game = RandomSubmodularGame(rng, n);
    ASSERT_TRUE(VerifySubmodularity(game).holds);
    for (int i = 0; i < n; ++i) {
      const MarginalProfile profile = AverageMarginalProfile(game, i);
      for (int c = 0; c + 1 < n; ++c) {
        EXPECT_GE(profile.z[c], profile.z[c + 1] - 1e-9);
      }
    }
  }
}

TEST(AverageMarginalProfileTest, CapacityErrorAboveCap) {
  const GameSpec game = TinyFacilityGame();
  EXPECT_THROW(AverageMarginalProfile(game, 0, /*enumeration_cap=*/1),
               CapacityError);
}

TEST(VerifySubmodularityTest, FacilityGamesAreSubmodular) {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> u(5 * 4);
    for (double& v : u) v = rng.NextInt(0, 9);
    const GameSpec game = GameSpec::FromFacility(UtilityMatrix(5, 4, u));
    EXPECT_TRUE(VerifySubmodularity(game).holds);
  }
}

TEST(VerifySubmodularityTest, DetectsSupermodularPair) {
  const GameSpec game = GameSpec::FromTable(2, {0.0, 1.0, 0.0, 3.0});
  const AssumptionReport report = VerifySubmodularity(game);
  ASSERT_FALSE(report.holds);
  ASSERT_TRUE(report.witness.has_value());
  const AssumptionWitness& w = *report.witness;
  EXPECT_EQ(w.player, 0);
  EXPECT_TRUE(w.inner.IsSubsetOf(w.outer));
  EXPECT_DOUBLE_EQ(w.inner_value, 1.0);  // MC_0({}) = 1
  EXPECT_DOUBLE_EQ(w.outer_value, 3.0);  // MC_0({1}) = 3
  EXPECT_DOUBLE_EQ(w.slack, 2.0);
}

TEST(VerifySubmodularityTest, WitnessReEvaluates) {
  Rng rng(41);
  int violating = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.NextInt(0, 3));
    const GameSpec game = RandomTableGame(rng, n);
    const AssumptionReport report = VerifySubmodularity(game);
    if (report.holds) continue;
    ++violating;
    const AssumptionWitness& w = *report.witness;
    ASSERT_TRUE(w.inner.IsSubsetOf(w.outer));
    ASSERT_FALSE(w.inner.Contains(w.player));
    ASSERT_FALSE(w.outer.Contains(w.player));
    const double inner_mc = MarginalContribution(game, w.player, w.inner);
    const double outer_mc = MarginalContribution(game, w.player, w.outer);
    EXPECT_DOUBLE_EQ(inner_mc, w.inner_value);
    EXPECT_DOUBLE_EQ(outer_mc, w.outer_value);
    EXPECT_GT(outer_mc - inner_mc, kDefaultTolerance);
  }
  EXPECT_GT(violating, 0);  // random tables are essentially never submodular
}

TEST(VerifySubmodularityTest, AdditiveGameIsBoundaryCase) {
  // v(S) = sum of member weights: equality throughout.
  const GameSpec game =
      GameSpec::FromCoverage({{2.0, 3.0, 4.0}, {{0}, {1}, {2}}});
  EXPECT_TRUE(VerifySubmodularity(game).holds);
}

TEST(VerifySubmodularityTest, SyntheticGamesAreSubmodular) {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(VerifySubmodularity(RandomSubmodularGame(rng, 6)).holds);
  }
}

TEST(VerifyReplicationRedundancyTest, DuplicateCoverageSetsHold) {
  const GameSpec game = GameSpec::FromCoverage(
      {{1.0, 2.0, 3.0}, {{0, 1}, {0, 1}, {2}}});
  EXPECT_TRUE(VerifyReplicationRedundancy(game, {0, 1}).holds);
}

TEST(VerifyReplicationRedundancyTest, OverlappingUnequalSetsFail) {
  const GameSpec game = GameSpec::FromCoverage(
      {{1.0, 2.0, 3.0}, {{0, 1}, {0, 2}, {1}}});
  const AssumptionReport report = VerifyReplicationRedundancy(game, {0, 1});
  ASSERT_FALSE(report.holds);
  const AssumptionWitness& w = *report.witness;
  // Re-evaluate the witness: the replica really contributes.
  EXPECT_GT(std::abs(MarginalContribution(game, w.player, w.outer)),
            kDefaultTolerance);
  EXPECT_DOUBLE_EQ(w.outer_value, 3.0);  // element 2 is worth 3
}

TEST(GameSpecTest, MonotoneValuationsAreMonotone) {
  Rng rng(61);
  const GameSpec facility = GameSpec::FromFacility(
      GenerateFacilityGame(5, 3, FacilityGenOptions{}, 7));
  const GameSpec coverage = RandomSubmodularGame(rng, 5);
  for (const GameSpec& game : {facility, coverage}) {
    const std::vector<double> table = ValueTable(game);
    for (uint64_t mask = 0; mask < table.size(); ++mask) {
      for (int b = 0; b < game.n_players(); ++b) {
        if (mask & (uint64_t{1} << b)) {
          EXPECT_LE(table[mask & ~(uint64_t{1} << b)], table[mask] + 1e-12);
        }
      }
    }
  }
}

}  // namespace
}  // namespace semival
