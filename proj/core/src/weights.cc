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
#include <sstream>
#include <stdexcept>

namespace semival {

WeightScheme WeightScheme::Custom(std::vector<double> alpha) {
  if (alpha.empty()) {
    throw std::invalid_argument("WeightScheme::Custom: empty alpha");
  }
  double sum = 0.0;
  for (double a : alpha) {
    if (!(a >= 0.0)) {
      throw std::invalid_argument(
          "WeightScheme::Custom: alpha entries must be non-negative");
    }
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("WeightScheme::Custom: alpha must sum to 1");
  }
  WeightScheme scheme(SchemeKind::kCustom);
  scheme.custom_alpha_ = std::move(alpha);
  return scheme;
}

WeightScheme WeightScheme::Parse(const std::string& text) {
  if (text == "shapley") return Shapley();
  if (text == "banzhaf") return Banzhaf();
  if (text == "loo") return LeaveOneOut();
  if (text == "robust-shapley") return RobustShapley();
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<double> alpha;
    std::stringstream ss(text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      const double v = std::stod(item, &pos);
      if (pos != item.size()) {
        throw std::invalid_argument("WeightScheme::Parse: bad alpha entry '" +
                                    item + "'");
      }
      alpha.push_back(v);
    }
    return Custom(std::move(alpha));
  }
  throw std::invalid_argument("WeightScheme::Parse: unknown scheme '" + text +
                              "'");
}

std::string WeightScheme::name() const {
  switch (kind_) {
    case SchemeKind::kShapley:
      return "shapley";
    case SchemeKind::kBanzhaf:
      return "banzhaf";
    case SchemeKind::kLeaveOneOut:
      return "loo";
    case SchemeKind::kRobustShapley:
      return "robust-shapley";
    case SchemeKind::kCustom: {
      std::ostringstream os;
      os << "custom:";
      for (size_t i = 0; i < custom_alpha_.size(); ++i) {
        if (i > 0) os << ",";
        os << custom_alpha_[i];
      }
      return os.str();
    }
  }
  return "";
}

double BinomialCoefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int t = 1; t <= k; ++t) {
    result *= static_cast<double>(n - k + t) / t;
  }
  return result;
}

double RobustShapleyGamma(int n_players, int coalition_size) {
  const int n = n_players;
  const int c = coalition_size;
  if (n < 1 || c < 0 || c > n - 1) {
    throw std::invalid_argument("RobustShapleyGamma: size out of range");
  }
  const int lo = (n - 1) / 2;       // floor((n-1)/2)
  const int hi = n - 1 - lo;        // ceil((n-1)/2)
  if (c >= lo) return 1.0;
  // hi! * lo! / (c! * (n-1-c)!) as a telescoped product; both the numerator
  // run (c, lo] and the denominator run (hi, n-1-c] have lo - c terms.
  double gamma = 1.0;
  for (int j = 1; j <= lo - c; ++j) {
    gamma *= static_cast<double>(c + j) / (hi + j);
  }
  return gamma;
}

double CoalitionWeight(const WeightScheme& scheme, int coalition_size,
                       int n_players) {
  const int c = coalition_size;
  const int n = n_players;
  if (n < 1 || c < 0 || c > n - 1) {
    throw std::invalid_argument("CoalitionWeight: coalition size out of range");
  }
  switch (scheme.kind()) {
    case SchemeKind::kShapley:
      // c!(n-c-1)!/n! = 1 / (n * C(n-1, c)); the binomial never overflows
      // for enumerable sizes and the ratio degrades gracefully to 0 beyond.
      return 1.0 / (n * BinomialCoefficient(n - 1, c));
    case SchemeKind::kBanzhaf:
      return std::exp2(1.0 - n);
    case SchemeKind::kLeaveOneOut:
      return c == n - 1 ? 1.0 : 0.0;
    case SchemeKind::kRobustShapley:
      return RobustShapleyGamma(n, c) / (n * BinomialCoefficient(n - 1, c));
    case SchemeKind::kCustom: {
      const auto& alpha = scheme.custom_alpha();
      if (static_cast<size_t>(c) >= alpha.size()) return 0.0;
      return alpha[c] / BinomialCoefficient(n - 1, c);
    }
  }
  return 0.0;
}

ImportanceWeights ComputeImportanceWeights(const WeightScheme& scheme,
                                           int n_players) {
  if (n_players < 1) {
    throw std::invalid_argument("ComputeImportanceWeights: n_players < 1");
  }
  ImportanceWeights weights;
  weights.n_players = n_players;
  weights.alpha.resize(n_players);
  for (int c = 0; c < n_players; ++c) {
    weights.alpha[c] =
        BinomialCoefficient(n_players - 1, c) *
        CoalitionWeight(scheme, c, n_players);
  }
  return weights;
}

}  // namespace semival
