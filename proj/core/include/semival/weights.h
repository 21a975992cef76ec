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

#ifndef SEMIVAL_WEIGHTS_H_
#define SEMIVAL_WEIGHTS_H_

#include <string>
#include <vector>

namespace semival {

enum class SchemeKind {
  kShapley,
  kBanzhaf,
  kLeaveOneOut,
  kRobustShapley,
  kCustom,
};

// A semivalue, identified by its per-coalition-size weights w(c, n): the
// payoff of player i is the sum over coalitions S of other players of
// w(|S|, n) * MC_i(S). Weights depend only on the coalition size, never on
// identities. A Custom scheme pins the importance-weight vector alpha
// directly (alpha[c] = C(n-1, c) * w(c, n)); entries must be non-negative
// and sum to 1.
class WeightScheme {
 public:
  static WeightScheme Shapley() { return WeightScheme(SchemeKind::kShapley); }
  static WeightScheme Banzhaf() { return WeightScheme(SchemeKind::kBanzhaf); }
  static WeightScheme LeaveOneOut() {
    return WeightScheme(SchemeKind::kLeaveOneOut);
  }
  static WeightScheme RobustShapley() {
    return WeightScheme(SchemeKind::kRobustShapley);
  }
  static WeightScheme Custom(std::vector<double> alpha);

  // Accepts "shapley" | "banzhaf" | "loo" | "robust-shapley" |
  // "custom:<comma-separated alpha>".
  static WeightScheme Parse(const std::string& text);

  SchemeKind kind() const { return kind_; }
  const std::vector<double>& custom_alpha() const { return custom_alpha_; }
  std::string name() const;

  friend bool operator==(const WeightScheme& a, const WeightScheme& b) {
    return a.kind_ == b.kind_ && a.custom_alpha_ == b.custom_alpha_;
  }

 private:
  explicit WeightScheme(SchemeKind kind) : kind_(kind) {}
  SchemeKind kind_;
  std::vector<double> custom_alpha_;
};

// C(n, k) as a double (product form; 0 outside 0 <= k <= n).
double BinomialCoefficient(int n, int k);

// The down-weighting factor of the Robust Shapley value:
// gamma = ceil((n-1)/2)! * floor((n-1)/2)! / (c! * (n-c-1)!) for
// c < floor((n-1)/2), and 1 otherwise. Always in (0, 1].
double RobustShapleyGamma(int n_players, int coalition_size);

// w(c, n) of the scheme; requires 0 <= c <= n-1.
double CoalitionWeight(const WeightScheme& scheme, int coalition_size,
                       int n_players);

// alpha[c] = C(n-1, c) * w(c, n). For every built-in scheme except Robust
// Shapley the entries form a probability distribution over coalition sizes;
// Robust Shapley deliberately sums to less than 1.
struct ImportanceWeights {
  int n_players = 0;
  std::vector<double> alpha;
};

ImportanceWeights ComputeImportanceWeights(const WeightScheme& scheme,
                                           int n_players);

}  // namespace semival

#endif  // SEMIVAL_WEIGHTS_H_
