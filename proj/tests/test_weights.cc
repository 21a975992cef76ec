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

#include "semival/weights.h"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"

namespace semival {
namespace {

TEST(BinomialTest, SmallValuesExact) {
  EXPECT_DOUBLE_EQ(BinomialCoefficient(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(BinomialCoefficient(5, 2), 10.0);
  EXPECT_DOUBLE_EQ(BinomialCoefficient(10, 10), 1.0);
  EXPECT_DOUBLE_EQ(BinomialCoefficient(3, 5), 0.0);
  EXPECT_DOUBLE_EQ(BinomialCoefficient(5, -1), 0.0);
}

TEST(CoalitionWeightTest, ShapleyValues) {
  const WeightScheme shapley = WeightScheme::Shapley();
  EXPECT_NEAR(CoalitionWeight(shapley, 1, 3), 1.0 / 6, 1e-15);
  EXPECT_NEAR(CoalitionWeight(shapley, 0, 3), 1.0 / 3, 1e-15);
  EXPECT_NEAR(CoalitionWeight(shapley, 2, 4), 1.0 / 12, 1e-15);
}

TEST(CoalitionWeightTest, BanzhafIsSizeIndependent) {
  const WeightScheme banzhaf = WeightScheme::Banzhaf();
  for (int c = 0; c < 3; ++c) {
    EXPECT_DOUBLE_EQ(CoalitionWeight(banzhaf, c, 3), 0.25);
  }
}

TEST(CoalitionWeightTest, LeaveOneOutIsIndicator) {
  const WeightScheme loo = WeightScheme::LeaveOneOut();
  EXPECT_DOUBLE_EQ(CoalitionWeight(loo, 2, 3), 1.0);
  EXPECT_DOUBLE_EQ(CoalitionWeight(loo, 1, 3), 0.0);
}

TEST(CoalitionWeightTest, RejectsOutOfRangeSize) {
  EXPECT_THROW(CoalitionWeight(WeightScheme::Shapley(), 3, 3),
               std::invalid_argument);
  EXPECT_THROW(CoalitionWeight(WeightScheme::Shapley(), -1, 3),
               std::invalid_argument);
}

TEST(RobustShapleyGammaTest, HandEvaluated) {
  EXPECT_NEAR(RobustShapleyGamma(5, 0), 1.0 / 6, 1e-15);
  EXPECT_NEAR(RobustShapleyGamma(5, 1), 2.0 / 3, 1e-15);
  EXPECT_DOUBLE_EQ(RobustShapleyGamma(5, 2), 1.0);  // c not < floor((n-1)/2)
  EXPECT_DOUBLE_EQ(RobustShapleyGamma(4, 3), 1.0);
}

TEST(RobustShapleyGammaTest, AlwaysInUnitInterval) {
  for (int n = 1; n <= 40; ++n) {
    for (int c = 0; c < n; ++c) {
      const double gamma = RobustShapleyGamma(n, c);
      EXPECT_GT(gamma, 0.0);
      EXPECT_LE(gamma, 1.0);
    }
  }
}

TEST(ImportanceWeightsTest, KnownSmallCases) {
  const ImportanceWeights shapley =
      ComputeImportanceWeights(WeightScheme::Shapley(), 3);
  for (double a : shapley.alpha) EXPECT_NEAR(a, 1.0 / 3, 1e-15);

  const ImportanceWeights banzhaf =
      ComputeImportanceWeights(WeightScheme::Banzhaf(), 3);
  EXPECT_DOUBLE_EQ(banzhaf.alpha[0], 0.25);
  EXPECT_DOUBLE_EQ(banzhaf.alpha[1], 0.5);
  EXPECT_DOUBLE_EQ(banzhaf.alpha[2], 0.25);

  const ImportanceWeights loo =
      ComputeImportanceWeights(WeightScheme::LeaveOneOut(), 3);
  EXPECT_DOUBLE_EQ(loo.alpha[0], 0.0);
  EXPECT_DOUBLE_EQ(loo.alpha[1], 0.0);
  EXPECT_DOUBLE_EQ(loo.alpha[2], 1.0);
}

TEST(ImportanceWeightsTest, BuiltInsSumToOneExceptRobust) {
  for (int n = 1; n <= 30; ++n) {
    for (const WeightScheme& scheme :
         {WeightScheme::Shapley(), WeightScheme::Banzhaf(),
          WeightScheme::LeaveOneOut()}) {
      const ImportanceWeights w = ComputeImportanceWeights(scheme, n);
      const double sum =
          std::accumulate(w.alpha.begin(), w.alpha.end(), 0.0);
      EXPECT_NEAR(sum, 1.0, 1e-9) << scheme.name() << " n=" << n;
    }
    const ImportanceWeights robust =
        ComputeImportanceWeights(WeightScheme::RobustShapley(), n);
    const double sum =
        std::accumulate(robust.alpha.begin(), robust.alpha.end(), 0.0);
    EXPECT_LE(sum, 1.0 + 1e-12);
    EXPECT_GT(sum, 0.0);
  }
}

TEST(WeightSchemeTest, CustomValidation) {
  EXPECT_NO_THROW(WeightScheme::Custom({0.5, 0.25, 0.25}));
  EXPECT_THROW(WeightScheme::Custom({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(WeightScheme::Custom({1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(WeightScheme::Custom({}), std::invalid_argument);
}

TEST(WeightSchemeTest, CustomMatchesItsAlpha) {
  const std::vector<double> alpha = {0.1, 0.4, 0.3, 0.2};
  const ImportanceWeights w =
      ComputeImportanceWeights(WeightScheme::Custom(alpha), 4);
  for (int c = 0; c < 4; ++c) EXPECT_NEAR(w.alpha[c], alpha[c], 1e-15);
}

TEST(WeightSchemeTest, ParseRoundTrip) {
  EXPECT_EQ(WeightScheme::Parse("shapley").kind(), SchemeKind::kShapley);
  EXPECT_EQ(WeightScheme::Parse("banzhaf").kind(), SchemeKind::kBanzhaf);
  EXPECT_EQ(WeightScheme::Parse("loo").kind(), SchemeKind::kLeaveOneOut);
  EXPECT_EQ(WeightScheme::Parse("robust-shapley").kind(),
            SchemeKind::kRobustShapley);
  const WeightScheme custom = WeightScheme::Parse("custom:0.5,0.25,0.25");
  EXPECT_EQ(custom.kind(), SchemeKind::kCustom);
  EXPECT_EQ(custom.custom_alpha().size(), 3u);
  EXPECT_THROW(WeightScheme::Parse("nucleolus"), std::invalid_argument);
  EXPECT_THROW(WeightScheme::Parse("custom:0.5,abc"), std::invalid_argument);
}

}  // namespace
}  // namespace semival
