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

#include "semival/replication.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "semival/errors.h"
#include "semival/payoff.h"

namespace semival {

namespace {

void CheckScenario(const ReplicationScenario& scenario) {
  if (scenario.malicious < 0 ||
      scenario.malicious >= scenario.base.n_players()) {
    throw std::invalid_argument("ReplicationScenario: bad malicious index");
  }
  if (scenario.replicas < 0) {
    throw std::invalid_argument("ReplicationScenario: replicas must be >= 0");
  }
}

std::vector<int> ReplicaIndices(int n_players, int malicious, int replicas) {
  std::vector<int> out;
  out.reserve(replicas + 1);
  out.push_back(malicious);
  for (int r = 0; r < replicas; ++r) out.push_back(n_players + r);
  return out;
}

}  // namespace

GameSpec InduceReplication(const ReplicationScenario& scenario,
                           int enumeration_cap) {
  CheckScenario(scenario);
  const GameSpec& base = scenario.base;
  const int n = base.n_players();
  const int i = scenario.malicious;
  const int k = scenario.replicas;

  switch (base.kind()) {
    case ValuationKind::kFacility:
      return GameSpec::FromFacility(
          base.facility()->WithReplicatedFacility(i, k));
    case ValuationKind::kCoverage: {
      CoverageData data = *base.coverage();
      for (int r = 0; r < k; ++r) data.covered.push_back(data.covered[i]);
      return GameSpec::FromCoverage(std::move(data));
    }
    case ValuationKind::kTable:
    case ValuationKind::kSynthetic: {
      const int induced_n = n + k;
      if (induced_n > enumeration_cap) {
        std::ostringstream os;
        os << "InduceReplication: induced table game with " << induced_n
           << " players exceeds the enumeration cap of " << enumeration_cap;
        throw CapacityError(os.str());
      }
      const std::vector<double>& values = *base.table();
      const uint64_t low = (uint64_t{1} << n) - 1;
      const uint64_t replica_bits =
          (uint64_t{1} << i) | (((uint64_t{1} << k) - 1) << n);
      std::vector<double> induced(size_t{1} << induced_n);
      for (uint64_t mask = 0; mask < induced.size(); ++mask) {
        const uint64_t honest = mask & low & ~(uint64_t{1} << i);
        const uint64_t in_base =
            (mask & replica_bits) ? (honest | (uint64_t{1} << i)) : honest;
        induced[mask] = values[in_base];
      }
      return GameSpec::FromTable(induced_n, std::move(induced));
    }
  }
  throw std::logic_error("InduceReplication: unreachable");
}

std::vector<double> ReplicatedImportanceWeights(const WeightScheme& scheme,
                                                int n_players, int replicas) {
  if (n_players < 1) {
    throw std::invalid_argument("ReplicatedImportanceWeights: n_players < 1");
  }
  if (replicas < 0) {
    throw std::invalid_argument("ReplicatedImportanceWeights: replicas < 0");
  }
  std::vector<double> alpha(n_players);
  for (int c = 0; c < n_players; ++c) {
    alpha[c] = (replicas + 1) * BinomialCoefficient(n_players - 1, c) *
               CoalitionWeight(scheme, c, n_players + replicas);
  }
  return alpha;
}

double TotalPayoffFromProfile(std::span<const double> z,
                              const WeightScheme& scheme, int replicas) {
  const int n = static_cast<int>(z.size());
  const std::vector<double> alpha =
      ReplicatedImportanceWeights(scheme, n, replicas);
  double total = 0.0;
  for (int c = 0; c < n; ++c) total += alpha[c] * z[c];
  return total;
}

std::vector<double> TotalPayoffCurve(const GameSpec& base, int player,
                                     const WeightScheme& scheme, int k_max,
                                     int enumeration_cap) {
  if (k_max < 0) {
    throw std::invalid_argument("TotalPayoffCurve: k_max must be >= 0");
  }
  const MarginalProfile profile =
      AverageMarginalProfile(base, player, enumeration_cap);
  std::vector<double> curve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    curve[k] = TotalPayoffFromProfile(profile.z, scheme, k);
  }
  return curve;
}

double DeltaSingleReplication(const GameSpec& game, const WeightScheme& scheme,
                              int player, int enumeration_cap) {
  const int n = game.n_players();
  if (player < 0 || player >= n) {
    throw std::invalid_argument("DeltaSingleReplication: bad player index");
  }
  const std::vector<double> curve =
      TotalPayoffCurve(game, player, scheme, 1, enumeration_cap);
  const double curve_delta = curve[1] - curve[0];

  switch (scheme.kind()) {
    case SchemeKind::kShapley: {
      // sum over S of |S|!(n-|S|-1)!/(n+1)! * (n-2|S|-1) * MC_i(S), summed
      // directly over coalitions as an independent route.
      const std::vector<double> values = ValueTable(game, enumeration_cap);
      const uint64_t bit = uint64_t{1} << player;
      const size_t size = size_t{1} << n;
      std::vector<double> size_weight(n);
      for (int c = 0; c < n; ++c) {
        size_weight[c] = (n - 2 * c - 1) /
                         (n * (n + 1.0) * BinomialCoefficient(n - 1, c));
      }
      double delta = 0.0;
      for (uint64_t mask = 0; mask < size; ++mask) {
        if (mask & bit) continue;
        delta +=
            size_weight[std::popcount(mask)] * (values[mask | bit] - values[mask]);
      }
      if (std::abs(delta - curve_delta) > 1e-9) {
        throw std::logic_error(
            "DeltaSingleReplication: closed form and curve disagree");
      }
      return delta;
    }
    case SchemeKind::kBanzhaf: {
      if (std::abs(curve_delta) > 1e-9) {
        throw std::logic_error(
            "DeltaSingleReplication: Banzhaf curve delta is not zero");
      }
      return 0.0;
    }
    default:
      throw std::invalid_argument(
          "DeltaSingleReplication: derived only for shapley and banzhaf");
  }
}

RobustnessVerdict CheckRobustness(const WeightScheme& scheme, int n_players,
                                  int k_max, RobustnessMode mode,
                                  double tolerance) {
  if (n_players < 2) {
    throw std::invalid_argument("CheckRobustness: n_players must be >= 2");
  }
  if (k_max < 1) {
    throw std::invalid_argument("CheckRobustness: k_max must be >= 1");
  }
  std::vector<std::vector<double>> prefix(k_max + 2);
  const int upto = mode == RobustnessMode::kIffCondition ? k_max : k_max + 1;
  for (int k = 0; k <= upto; ++k) {
    std::vector<double> alpha =
        ReplicatedImportanceWeights(scheme, n_players, k);
    for (int c = 1; c < n_players; ++c) alpha[c] += alpha[c - 1];
    prefix[k] = std::move(alpha);
  }

  RobustnessVerdict verdict;
  verdict.mode = mode;
  auto compare = [&](int k_label, const std::vector<double>& lhs,
                     const std::vector<double>& rhs) {
    for (int p = 0; p < n_players; ++p) {
      if (lhs[p] < rhs[p] - tolerance) {
        verdict.failing.push_back(PrefixViolation{k_label, p, lhs[p], rhs[p]});
      }
    }
  };
  switch (mode) {
    case RobustnessMode::kIffCondition:
      for (int k = 1; k <= k_max; ++k) compare(k, prefix[0], prefix[k]);
      break;
    case RobustnessMode::kMonotoneDecrease:
      for (int k = 0; k <= k_max; ++k) compare(k + 1, prefix[k], prefix[k + 1]);
      break;
    case RobustnessMode::kMonotoneIncrease:
      for (int k = 0; k <= k_max; ++k) compare(k + 1, prefix[k + 1], prefix[k]);
      break;
  }
  verdict.robust = verdict.failing.empty();
  return verdict;
}

WeightPropertyReport ShapleyWeightProperties(int n_players, int k_max,
                                             double tolerance) {
  if (n_players < 2) {
    throw std::invalid_argument(
        "ShapleyWeightProperties: n_players must be >= 2");
  }
  if (k_max < 0) {
    throw std::invalid_argument("ShapleyWeightProperties: k_max must be >= 0");
  }
  const WeightScheme shapley = WeightScheme::Shapley();
  std::vector<std::vector<double>> prefix(k_max + 3);
  for (int k = 0; k <= k_max + 2; ++k) {
    std::vector<double> alpha =
        ReplicatedImportanceWeights(shapley, n_players, k);
    for (int c = 1; c < n_players; ++c) alpha[c] += alpha[c - 1];
    prefix[k] = std::move(alpha);
  }

  WeightPropertyReport report;
  auto note = [&](bool* flag, double violation) {
    if (violation > report.max_abs_violation) {
      report.max_abs_violation = violation;
    }
    if (violation > tolerance) *flag = false;
  };
  for (int k = 0; k <= k_max; ++k) {
    note(&report.sums_to_one, std::abs(prefix[k][n_players - 1] - 1.0));
    for (int p = 0; p < n_players; ++p) {
      if (k < k_max) {
        note(&report.prefix_monotone, prefix[k][p] - prefix[k + 1][p]);
      }
      if (k <= k_max - 2) {
        const double first = prefix[k + 1][p] - prefix[k][p];
        const double second = prefix[k + 2][p] - prefix[k + 1][p];
        note(&report.increments_diminishing, second - first);
      }
    }
  }
  return report;
}

double LimitTotalPayoff(const GameSpec& game, const WeightScheme& scheme,
                        int player, int enumeration_cap) {
  const int n = game.n_players();
  if (player < 0 || player >= n) {
    throw std::invalid_argument("LimitTotalPayoff: bad player index");
  }
  if (n > enumeration_cap) {
    throw CapacityError("LimitTotalPayoff: game exceeds the enumeration cap");
  }
  switch (scheme.kind()) {
    case SchemeKind::kShapley:
      // alpha_c^k concentrates on c = 0 as k grows, so the limit is
      // z_i(0) = v({i}) - v({}).
      return game.Value(uint64_t{1} << player) - game.Value(0);
    case SchemeKind::kBanzhaf:
    case SchemeKind::kLeaveOneOut:
    case SchemeKind::kRobustShapley:
      // Their replicated weights vanish uniformly in k.
      return 0.0;
    case SchemeKind::kCustom:
      throw NotDerivedError(
          "LimitTotalPayoff: no limit derived for custom schemes");
  }
  return 0.0;
}

LossBound RobustShapleyLossBound(const GameSpec& game, int player,
                                 int replicas, int enumeration_cap) {
  if (replicas < 0) {
    throw std::invalid_argument("RobustShapleyLossBound: replicas < 0");
  }
  const int n = game.n_players();
  const MarginalProfile profile =
      AverageMarginalProfile(game, player, enumeration_cap);
  const WeightScheme scheme = WeightScheme::RobustShapley();
  LossBound result;
  result.actual_loss = TotalPayoffFromProfile(profile.z, scheme, 0) -
                       TotalPayoffFromProfile(profile.z, scheme, replicas);
  const double shrink = 1.0 - std::ldexp(replicas + 1.0, -replicas);
  double bound = 0.0;
  for (int c = 0; c < n; ++c) {
    bound += shrink * RobustShapleyGamma(n, c) * profile.z[c];
  }
  result.bound = bound / n;
  return result;
}

PerturbationGain PerturbationGainBound(const ReplicationScenario& scenario,
                                       const WeightScheme& scheme,
                                       double epsilon,
                                       const GameSpec& perturbed_game,
                                       int enumeration_cap) {
  CheckScenario(scenario);
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("PerturbationGainBound: epsilon must be >= 0");
  }
  const int n = scenario.base.n_players();
  const int k = scenario.replicas;
  const int induced_n = n + k;
  if (perturbed_game.n_players() != induced_n) {
    throw std::invalid_argument(
        "PerturbationGainBound: perturbed game must have n + k players");
  }
  const GameSpec induced = InduceReplication(scenario, enumeration_cap);
  const std::vector<double> v_ind = ValueTable(induced, enumeration_cap);
  const std::vector<double> v_pert = ValueTable(perturbed_game, enumeration_cap);

  const std::vector<int> replica_indices =
      ReplicaIndices(n, scenario.malicious, k);
  uint64_t replica_mask = 0;
  for (int r : replica_indices) replica_mask |= uint64_t{1} << r;

  // Perturbations must stay within epsilon of exact replication: identical
  // marginal contributions toward honest coalitions (up to epsilon) and at
  // most epsilon toward coalitions holding another replica.
  const double slack = epsilon + kDefaultTolerance;
  const size_t size = size_t{1} << induced_n;
  for (int r : replica_indices) {
    const uint64_t bit = uint64_t{1} << r;
    for (uint64_t mask = 0; mask < size; ++mask) {
      if (mask & bit) continue;
      const double mc_pert = v_pert[mask | bit] - v_pert[mask];
      if (mask & replica_mask) {
        if (mc_pert > slack) {
          std::ostringstream os;
          os << "PerturbationGainBound: replica " << r
             << " contributes " << mc_pert << " > epsilon toward "
             << Coalition(mask, induced_n).ToString();
          throw AssumptionError(os.str());
        }
      } else {
        const double mc_ind = v_ind[mask | bit] - v_ind[mask];
        if (std::abs(mc_pert - mc_ind) > slack) {
          std::ostringstream os;
          os << "PerturbationGainBound: replica " << r
             << " deviates by " << std::abs(mc_pert - mc_ind)
             << " > epsilon toward honest coalition "
             << Coalition(mask, induced_n).ToString();
          throw AssumptionError(os.str());
        }
      }
    }
  }

  const std::vector<double> pay_ind =
      ExactPayoffsAll(induced, scheme, enumeration_cap);
  const std::vector<double> pay_pert =
      ExactPayoffsAll(perturbed_game, scheme, enumeration_cap);
  PerturbationGain result;
  for (int r : replica_indices) {
    result.gain += pay_pert[r] - pay_ind[r];
  }
  result.bound = (k + 1.0) * epsilon;
  return result;
}

}  // namespace semival
