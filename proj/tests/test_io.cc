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

#include "semival/io.h"

#include "gtest/gtest.h"
#include "semival/rng.h"
#include "test_util.h"

namespace semival {
namespace {

using testing_util::RandomTableGame;

TEST(GameJsonTest, ParsesTableGame) {
  const GameSpec game = ParseGameJson(R"({
    "n_players": 2,
    "valuation": {"type": "table", "values": [0, 2, 1, 2]}
  })");
  EXPECT_EQ(game.kind(), ValuationKind::kTable);
  EXPECT_EQ(game.n_players(), 2);
  EXPECT_DOUBLE_EQ(game.Value(0b01), 2.0);
}

TEST(GameJsonTest, ParsesFacilityGame) {
  const GameSpec game = ParseGameJson(R"({
    "n_players": 2,
    "valuation": {"type": "facility", "utilities": [[2, 0], [1, 3]]}
  })");
  EXPECT_EQ(game.kind(), ValuationKind::kFacility);
  EXPECT_DOUBLE_EQ(game.Value(0b11), 5.0);
}

TEST(GameJsonTest, RoundTripPreservesValues) {
  Rng rng(7);
  const std::vector<GameSpec> games = {
      RandomTableGame(rng, 5),
      GameSpec::FromFacility(GenerateFacilityGame(4, 3, {}, 9)),
      GameSpec::FromCoverage({{1.0, 0.5, 2.0}, {{0, 2}, {1}, {0, 1, 2}}}),
      GameSpec::Synthetic(5, 77),
  };
  for (const GameSpec& game : games) {
    const GameSpec back = ParseGameJson(GameToJson(game));
    ASSERT_EQ(back.n_players(), game.n_players());
    ASSERT_EQ(back.kind(), game.kind());
    for (uint64_t mask = 0; mask < (uint64_t{1} << game.n_players());
         ++mask) {
      EXPECT_EQ(back.Value(mask), game.Value(mask));
    }
  }
}

TEST(GameJsonTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseGameJson("not json"), std::runtime_error);
  EXPECT_THROW(ParseGameJson(R"({"n_players": 2})"), std::runtime_error);
  EXPECT_THROW(ParseGameJson(R"({
    "n_players": 2,
    "valuation": {"type": "mystery"}
  })"),
               std::runtime_error);
  EXPECT_THROW(ParseGameJson(R"({
    "n_players": 3,
    "valuation": {"type": "table", "values": [0, 1]}
  })"),
               std::invalid_argument);
}

TEST(UtilityCsvTest, RoundTrip) {
  const UtilityMatrix m = GenerateFacilityGame(5, 4, {}, 3);
  const UtilityMatrix back = ParseUtilityMatrixCsv(UtilityMatrixToCsv(m));
  EXPECT_EQ(back.data(), m.data());
}

TEST(UtilityCsvTest, HeaderRequired) {
  EXPECT_THROW(ParseUtilityMatrixCsv("1,2\n3,4\n"), std::runtime_error);
  const UtilityMatrix m = ParseUtilityMatrixCsv("d0,d1\n1,2\n3,4\n");
  EXPECT_DOUBLE_EQ(m.at(1, 0), 3.0);
}

TEST(ReportJsonTest, RobustnessVerdictShape) {
  const RobustnessVerdict verdict = CheckRobustness(
      WeightScheme::Shapley(), 3, 2, RobustnessMode::kIffCondition);
  const std::string json =
      RobustnessVerdictToJson(WeightScheme::Shapley(), 3, 2, verdict);
  EXPECT_NE(json.find("\"scheme\": \"shapley\""), std::string::npos);
  EXPECT_NE(json.find("\"robust\": false"), std::string::npos);
  EXPECT_NE(json.find("\"violations\""), std::string::npos);
  EXPECT_NE(json.find("\"lhs\""), std::string::npos);
}

TEST(ReportJsonTest, ModeNamesRoundTrip) {
  for (RobustnessMode mode :
       {RobustnessMode::kIffCondition, RobustnessMode::kMonotoneDecrease,
        RobustnessMode::kMonotoneIncrease}) {
    EXPECT_EQ(ParseRobustnessMode(RobustnessModeName(mode)), mode);
  }
  EXPECT_THROW(ParseRobustnessMode("sideways"), std::invalid_argument);
}

TEST(ReportJsonTest, AssumptionReportCarriesWitness) {
  const GameSpec bad = GameSpec::FromTable(2, {0.0, 1.0, 0.0, 3.0});
  const std::string json =
      AssumptionReportToJson("submodularity", VerifySubmodularity(bad));
  EXPECT_NE(json.find("\"holds\": false"), std::string::npos);
  EXPECT_NE(json.find("\"witness\""), std::string::npos);
}

}  // namespace
}  // namespace semival
