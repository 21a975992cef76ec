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

#ifndef SEMIVAL_FACILITY_H_
#define SEMIVAL_FACILITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "semival/coalition.h"

namespace semival {

// Non-negative utilities of |D| customers from |L| facility locations.
// Rows are facilities (the players of a facility-location game), columns
// are customers.
class UtilityMatrix {
 public:
  UtilityMatrix(int num_facilities, int num_customers,
                std::vector<double> row_major);

  static UtilityMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int num_facilities() const { return num_facilities_; }
  int num_customers() const { return num_customers_; }

  double at(int facility, int customer) const {
    return u_[static_cast<size_t>(facility) * num_customers_ + customer];
  }

  const std::vector<double>& data() const { return u_; }

  // Returns a matrix with `copies` duplicates of row `facility` appended at
  // the end. The original row stays in place, so the duplicated facility
  // occupies rows {facility, n, n+1, ..., n+copies-1}.
  UtilityMatrix WithReplicatedFacility(int facility, int copies) const;

 private:
  int num_facilities_;
  int num_customers_;
  std::vector<double> u_;  // row-major
};

struct FacilityGenOptions {
  enum class Mode {
    kUniformInt,    // each utility an integer uniform in [min, max]
    kManhattanMap,  // u = max(0, 100 - manhattan distance) on a square grid
  };
  Mode mode = Mode::kUniformInt;
  int min_utility = 0;
  int max_utility = 20;
  int map_size = 50;
};

// Deterministic given the seed.
UtilityMatrix GenerateFacilityGame(int num_facilities, int num_customers,
                                   const FacilityGenOptions& options,
                                   uint64_t seed);

// Fac(S) = sum over customers of the best open-facility utility; Fac({}) = 0.
double FacilityValue(const UtilityMatrix& m, std::span<const int> open);
double FacilityValue(const UtilityMatrix& m, const Coalition& open);

// Per-customer facility order, ascending by utility with ties broken by
// ascending facility index. The "strictly dominated count" of facility i in
// dimension d is |{j != i : u_jd < u_id}|; facilities tied with i are
// excluded, since a tied competitor already bounds i's marginal value.
class SortedDimensions {
 public:
  explicit SortedDimensions(const UtilityMatrix& m);

  int FacilityAtRank(int customer, int rank) const {
    return order_[static_cast<size_t>(customer) * n_ + rank];
  }
  int RankOf(int facility, int customer) const {
    return rank_[static_cast<size_t>(customer) * n_ + facility];
  }
  int StrictlyDominatedCount(int facility, int customer) const {
    return dominated_[static_cast<size_t>(customer) * n_ + facility];
  }

 private:
  int n_;
  std::vector<int> order_;      // [customer][rank] -> facility
  std::vector<int> rank_;      // [customer][facility] -> rank
  std::vector<int> dominated_;  // [customer][facility] -> |L_id|
};

// Closed-form Shapley / Banzhaf values of a facility-location game,
// O(|L| log |L|) per customer. Equal to exhaustive enumeration of the game
// over all 2^|L| coalitions (see tests), but usable far beyond it.
std::vector<double> FastShapley(const UtilityMatrix& m);
std::vector<double> FastBanzhaf(const UtilityMatrix& m);

}  // namespace semival

#endif  // SEMIVAL_FACILITY_H_
