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

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "semival/errors.h"
#include "semival/rng.h"
#include "semival/weights.h"

namespace semival {

namespace {

void CheckEnumerable(int n_players, int cap, const char* who) {
  if (n_players > cap) {
    std::ostringstream os;
    os << who << ": " << n_players
       << " players exceed the enumeration cap of " << cap;
    throw CapacityError(os.str());
  }
}

std::vector<double> CoverageTable(const CoverageData& data, int n_players) {
  const size_t size = size_t{1} << n_players;
  const uint64_t full = size - 1;
  std::vector<uint64_t> owners(data.element_weights.size(), 0);
  for (size_t p = 0; p < data.covered.size(); ++p) {
    for (int idx : data.covered[p]) owners[idx] |= uint64_t{1} << p;
  }
  // acc[m] = total weight of elements owned by exactly the player set m; its
  // subset-sum at ~mask is the weight no member of mask covers.
  std::vector<double> acc(size, 0.0);
  double total = 0.0;
  for (size_t e = 0; e < data.element_weights.size(); ++e) {
    acc[owners[e]] += data.element_weights[e];
    total += data.element_weights[e];
  }
  for (int b = 0; b < n_players; ++b) {
    const uint64_t bit = uint64_t{1} << b;
    for (uint64_t m = 0; m < size; ++m) {
      if (m & bit) acc[m] += acc[m ^ bit];
    }
  }
  std::vector<double> values(size);
  for (uint64_t m = 0; m < size; ++m) values[m] = total - acc[full & ~m];
  return values;
}

}  // namespace

struct GameSpec::Impl {
  int n_players = 0;
  ValuationKind kind = ValuationKind::kTable;
  std::vector<double> table;                 // kTable, kSynthetic
  std::optional<UtilityMatrix> facility;     // kFacility
  std::optional<CoverageData> coverage;      // kCoverage
  std::optional<SyntheticInfo> synthetic;    // kSynthetic
  std::vector<uint64_t> element_owners;      // kCoverage, per element
  double coverage_total = 0.0;               // kCoverage
};

GameSpec::GameSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

GameSpec GameSpec::FromTable(int n_players, std::vector<double> values) {
  if (n_players < 1 || n_players > Coalition::kMaxPlayers) {
    throw std::invalid_argument("GameSpec: n_players out of range");
  }
  if (values.size() != (size_t{1} << n_players)) {
    throw std::invalid_argument("GameSpec: table must have exactly 2^n values");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("GameSpec: table values must be finite");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n_players = n_players;
  impl->kind = ValuationKind::kTable;
  impl->table = std::move(values);
  return GameSpec(std::move(impl));
}

GameSpec GameSpec::FromFacility(UtilityMatrix m) {
  if (m.num_facilities() > Coalition::kMaxPlayers) {
    throw std::invalid_argument(
        "GameSpec: facility games as GameSpec support at most 63 players");
  }
  auto impl = std::make_shared<Impl>();
  impl->n_players = m.num_facilities();
  impl->kind = ValuationKind::kFacility;
  impl->facility.emplace(std::move(m));
  return GameSpec(std::move(impl));
}

GameSpec GameSpec::FromCoverage(CoverageData data) {
  const int n = static_cast<int>(data.covered.size());
  if (n < 1 || n > Coalition::kMaxPlayers) {
    throw std::invalid_argument("GameSpec: coverage player count out of range");
  }
  std::vector<uint64_t> owners(data.element_weights.size(), 0);
  for (int p = 0; p < n; ++p) {
    for (int e : data.covered[p]) {
      if (e < 0 || static_cast<size_t>(e) >= data.element_weights.size()) {
        throw std::invalid_argument("GameSpec: covered element out of range");
      }
      owners[e] |= uint64_t{1} << p;
    }
  }
  double total = 0.0;
  for (double w : data.element_weights) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("GameSpec: element weights must be finite");
    }
    total += w;
  }
  auto impl = std::make_shared<Impl>();
  impl->n_players = n;
  impl->kind = ValuationKind::kCoverage;
  impl->coverage.emplace(std::move(data));
  impl->element_owners = std::move(owners);
  impl->coverage_total = total;
  return GameSpec(std::move(impl));
}

GameSpec GameSpec::Synthetic(int n_players, uint64_t seed,
                             const SyntheticParams& params) {
  if (n_players < 1) {
    throw std::invalid_argument("GameSpec: n_players out of range");
  }
  CheckEnumerable(n_players, kDefaultEnumerationCap, "GameSpec::Synthetic");
  const int universe =
      params.universe_size > 0 ? params.universe_size : 3 * n_players;
  Rng rng(seed);
  CoverageData data;
  data.element_weights.resize(universe);
  for (double& w : data.element_weights) {
    w = params.weight_scale * rng.NextUnit();
  }
  data.covered.resize(n_players);
  for (int p = 0; p < n_players; ++p) {
    for (int e = 0; e < universe; ++e) {
      if (rng.NextUnit() < params.cover_probability) {
        data.covered[p].push_back(e);
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n_players = n_players;
  impl->kind = ValuationKind::kSynthetic;
  impl->table = CoverageTable(data, n_players);
  impl->synthetic = SyntheticInfo{seed, params};
  impl->synthetic->params.universe_size = universe;
  return GameSpec(std::move(impl));
}

int GameSpec::n_players() const { return impl_->n_players; }
ValuationKind GameSpec::kind() const { return impl_->kind; }

double GameSpec::Value(uint64_t mask) const {
  const Impl& impl = *impl_;
  if (impl.n_players < 64 && (mask >> impl.n_players) != 0) {
    throw std::invalid_argument("GameSpec::Value: coalition out of range");
  }
  switch (impl.kind) {
    case ValuationKind::kTable:
    case ValuationKind::kSynthetic:
      return impl.table[mask];
    case ValuationKind::kFacility: {
      const UtilityMatrix& m = *impl.facility;
      double total = 0.0;
      for (int d = 0; d < m.num_customers(); ++d) {
        double best = 0.0;
        for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          best = std::max(best, m.at(std::countr_zero(rest), d));
        }
        total += best;
      }
      return total;
    }
    case ValuationKind::kCoverage: {
      double covered = 0.0;
      for (size_t e = 0; e < impl.element_owners.size(); ++e) {
        if (impl.element_owners[e] & mask) {
          covered += impl.coverage->element_weights[e];
        }
      }
      return covered;
    }
  }
  return 0.0;
}

const std::vector<double>* GameSpec::table() const {
  return impl_->table.empty() ? nullptr : &impl_->table;
}
const UtilityMatrix* GameSpec::facility() const {
  return impl_->facility ? &*impl_->facility : nullptr;
}
const CoverageData* GameSpec::coverage() const {
  return impl_->coverage ? &*impl_->coverage : nullptr;
}
const GameSpec::SyntheticInfo* GameSpec::synthetic() const {
  return impl_->synthetic ? &*impl_->synthetic : nullptr;
}

double Evaluate(const GameSpec& game, const Coalition& s) {
  if (s.n_players() != game.n_players()) {
    throw std::invalid_argument("Evaluate: coalition universe mismatch");
  }
  return game.Value(s.bits());
}

double MarginalContribution(const GameSpec& game, int player,
                            const Coalition& s) {
  if (player < 0 || player >= game.n_players()) {
    throw std::invalid_argument("MarginalContribution: bad player index");
  }
  if (s.Contains(player)) {
    throw std::invalid_argument(
        "MarginalContribution: player already in coalition");
  }
  if (s.n_players() != game.n_players()) {
    throw std::invalid_argument(
        "MarginalContribution: coalition universe mismatch");
  }
  const uint64_t bit = uint64_t{1} << player;
  return game.Value(s.bits() | bit) - game.Value(s.bits());
}

std::vector<double> ValueTable(const GameSpec& game, int enumeration_cap) {
  const int n = game.n_players();
  CheckEnumerable(n, enumeration_cap, "ValueTable");
  const size_t size = size_t{1} << n;
  switch (game.kind()) {
    case ValuationKind::kTable:
    case ValuationKind::kSynthetic:
      return *game.table();
    case ValuationKind::kFacility: {
      const UtilityMatrix& m = *game.facility();
      std::vector<double> values(size, 0.0);
      std::vector<double> colmax(size);
      for (int d = 0; d < m.num_customers(); ++d) {
        colmax[0] = 0.0;
        for (uint64_t mask = 1; mask < size; ++mask) {
          const uint64_t low = mask & (mask - 1);
          colmax[mask] =
              std::max(colmax[low], m.at(std::countr_zero(mask), d));
        }
        for (uint64_t mask = 0; mask < size; ++mask) {
          values[mask] += colmax[mask];
        }
      }
      return values;
    }
    case ValuationKind::kCoverage:
      return CoverageTable(*game.coverage(), n);
  }
  return {};
}

MarginalProfile AverageMarginalProfile(const GameSpec& game, int player,
                                       int enumeration_cap) {
  const int n = game.n_players();
  if (player < 0 || player >= n) {
    throw std::invalid_argument("AverageMarginalProfile: bad player index");
  }
  CheckEnumerable(n, enumeration_cap, "AverageMarginalProfile");
  const std::vector<double> values = ValueTable(game, enumeration_cap);
  const uint64_t bit = uint64_t{1} << player;
  MarginalProfile profile;
  profile.player = player;
  profile.z.assign(n, 0.0);
  const size_t size = size_t{1} << n;
  for (uint64_t mask = 0; mask < size; ++mask) {
    if (mask & bit) continue;
    profile.z[std::popcount(mask)] += values[mask | bit] - values[mask];
  }
  for (int c = 0; c < n; ++c) {
    profile.z[c] /= BinomialCoefficient(n - 1, c);
  }
  return profile;
}

std::string AssumptionWitness::Describe() const {
  std::ostringstream os;
  os << "player " << player << ": MC(" << inner.ToString()
     << ") = " << inner_value << " vs MC(" << outer.ToString()
     << ") = " << outer_value << ", slack " << slack;
  return os.str();
}

AssumptionReport VerifySubmodularity(const GameSpec& game, double tolerance,
                                     int enumeration_cap) {
  const int n = game.n_players();
  CheckEnumerable(n, enumeration_cap, "VerifySubmodularity");
  const std::vector<double> values = ValueTable(game, enumeration_cap);
  const size_t size = size_t{1} << n;

  AssumptionReport report;
  double worst = tolerance;
  std::vector<double> mc(size);
  std::vector<double> min_mc(size);
  std::vector<uint64_t> argmin(size);
  for (int i = 0; i < n; ++i) {
    const uint64_t bit = uint64_t{1} << i;
    for (uint64_t m = 0; m < size; ++m) {
      if (m & bit) continue;
      mc[m] = values[m | bit] - values[m];
      min_mc[m] = mc[m];
      argmin[m] = m;
    }
    // Min of MC over all subsets of each coalition, so that the worst nested
    // pair for each outer coalition is available directly.
    for (int b = 0; b < n; ++b) {
      if (b == i) continue;
      const uint64_t bbit = uint64_t{1} << b;
      for (uint64_t m = 0; m < size; ++m) {
        if ((m & bit) || !(m & bbit)) continue;
        if (min_mc[m ^ bbit] < min_mc[m]) {
          min_mc[m] = min_mc[m ^ bbit];
          argmin[m] = argmin[m ^ bbit];
        }
      }
    }
    for (uint64_t m = 0; m < size; ++m) {
      if (m & bit) continue;
      const double slack = mc[m] - min_mc[m];
      if (slack > worst) {
        worst = slack;
        report.witness = AssumptionWitness{
            .player = i,
            .inner = Coalition(argmin[m], n),
            .outer = Coalition(m, n),
            .inner_value = min_mc[m],
            .outer_value = mc[m],
            .slack = slack,
        };
      }
    }
  }
  report.holds = !report.witness.has_value();
  return report;
}

AssumptionReport VerifyReplicationRedundancy(const GameSpec& game,
                                             const std::vector<int>& replicas,
                                             double tolerance,
                                             int enumeration_cap) {
  const int n = game.n_players();
  CheckEnumerable(n, enumeration_cap, "VerifyReplicationRedundancy");
  uint64_t replica_mask = 0;
  for (int r : replicas) {
    if (r < 0 || r >= n) {
      throw std::invalid_argument(
          "VerifyReplicationRedundancy: bad replica index");
    }
    replica_mask |= uint64_t{1} << r;
  }
  const std::vector<double> values = ValueTable(game, enumeration_cap);
  const size_t size = size_t{1} << n;

  AssumptionReport report;
  double worst = tolerance;
  for (int j : replicas) {
    const uint64_t bit = uint64_t{1} << j;
    const uint64_t others = replica_mask & ~bit;
    if (others == 0) continue;
    for (uint64_t m = 0; m < size; ++m) {
      if ((m & bit) || !(m & others)) continue;
      const double mc = values[m | bit] - values[m];
      if (std::abs(mc) > worst) {
        worst = std::abs(mc);
        report.witness = AssumptionWitness{
            .player = j,
            .inner = Coalition::Empty(n),
            .outer = Coalition(m, n),
            .inner_value = 0.0,
            .outer_value = mc,
            .slack = std::abs(mc),
        };
      }
    }
  }
  report.holds = !report.witness.has_value();
  return report;
}

}  // namespace semival
