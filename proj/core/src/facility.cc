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

#include "semival/facility.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "semival/rng.h"

namespace semival {

UtilityMatrix::UtilityMatrix(int num_facilities, int num_customers,
                             std::vector<double> row_major)
    : num_facilities_(num_facilities),
      num_customers_(num_customers),
      u_(std::move(row_major)) {
  if (num_facilities <= 0 || num_customers <= 0) {
    throw std::invalid_argument("UtilityMatrix: sizes must be positive");
  }
  if (u_.size() != static_cast<size_t>(num_facilities) * num_customers) {
    throw std::invalid_argument("UtilityMatrix: data size mismatch");
  }
  for (double v : u_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(
          "UtilityMatrix: utilities must be finite and non-negative");
    }
  }
}

UtilityMatrix UtilityMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw std::invalid_argument("UtilityMatrix: no rows");
  }
  const size_t d = rows[0].size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw std::invalid_argument("UtilityMatrix: ragged rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return UtilityMatrix(static_cast<int>(rows.size()), static_cast<int>(d),
                       std::move(flat));
}

UtilityMatrix UtilityMatrix::WithReplicatedFacility(int facility,
                                                    int copies) const {
  if (facility < 0 || facility >= num_facilities_) {
    throw std::invalid_argument("WithReplicatedFacility: bad facility index");
  }
  if (copies < 0) {
    throw std::invalid_argument("WithReplicatedFacility: copies must be >= 0");
  }
  std::vector<double> out = u_;
  out.reserve(out.size() + static_cast<size_t>(copies) * num_customers_);
  const auto row_begin =
      u_.begin() + static_cast<size_t>(facility) * num_customers_;
  for (int c = 0; c < copies; ++c) {
    out.insert(out.end(), row_begin, row_begin + num_customers_);
  }
  return UtilityMatrix(num_facilities_ + copies, num_customers_,
                       std::move(out));
}

UtilityMatrix GenerateFacilityGame(int num_facilities, int num_customers,
                                   const FacilityGenOptions& options,
                                   uint64_t seed) {
  if (num_facilities <= 0 || num_customers <= 0) {
    throw std::invalid_argument("GenerateFacilityGame: sizes must be positive");
  }
  Rng rng(seed);
  std::vector<double> u(static_cast<size_t>(num_facilities) * num_customers);
  switch (options.mode) {
    case FacilityGenOptions::Mode::kUniformInt: {
      for (double& v : u) {
        v = static_cast<double>(
            rng.NextInt(options.min_utility, options.max_utility));
      }
      break;
    }
    case FacilityGenOptions::Mode::kManhattanMap: {
      const int size = options.map_size;
      if (size <= 0) {
        throw std::invalid_argument("GenerateFacilityGame: bad map size");
      }
      std::vector<int> fx(num_facilities), fy(num_facilities);
      for (int i = 0; i < num_facilities; ++i) {
        fx[i] = static_cast<int>(rng.NextInt(0, size - 1));
        fy[i] = static_cast<int>(rng.NextInt(0, size - 1));
      }
      for (int d = 0; d < num_customers; ++d) {
        const int cx = static_cast<int>(rng.NextInt(0, size - 1));
        const int cy = static_cast<int>(rng.NextInt(0, size - 1));
        for (int i = 0; i < num_facilities; ++i) {
          const int dist = std::abs(fx[i] - cx) + std::abs(fy[i] - cy);
          u[static_cast<size_t>(i) * num_customers + d] =
              std::max(0, 100 - dist);
        }
      }
      break;
    }
  }
  return UtilityMatrix(num_facilities, num_customers, std::move(u));
}

double FacilityValue(const UtilityMatrix& m, std::span<const int> open) {
  for (int i : open) {
    if (i < 0 || i >= m.num_facilities()) {
      throw std::invalid_argument("FacilityValue: facility index out of range");
    }
  }
  double total = 0.0;
  for (int d = 0; d < m.num_customers(); ++d) {
    double best = 0.0;
    for (int i : open) best = std::max(best, m.at(i, d));
    total += best;
  }
  return total;
}

double FacilityValue(const UtilityMatrix& m, const Coalition& open) {
  if (open.n_players() != m.num_facilities()) {
    throw std::invalid_argument("FacilityValue: coalition universe mismatch");
  }
  const std::vector<int> members = open.Members();
  return FacilityValue(m, std::span<const int>(members));
}

SortedDimensions::SortedDimensions(const UtilityMatrix& m)
    : n_(m.num_facilities()),
      order_(static_cast<size_t>(m.num_customers()) * n_),
      rank_(static_cast<size_t>(m.num_customers()) * n_),
      dominated_(static_cast<size_t>(m.num_customers()) * n_) {
  for (int d = 0; d < m.num_customers(); ++d) {
    int* order = &order_[static_cast<size_t>(d) * n_];
    std::iota(order, order + n_, 0);
    std::sort(order, order + n_, [&](int a, int b) {
      if (m.at(a, d) != m.at(b, d)) return m.at(a, d) < m.at(b, d);
      return a < b;
    });
    int* rank = &rank_[static_cast<size_t>(d) * n_];
    int* dom = &dominated_[static_cast<size_t>(d) * n_];
    int block_start = 0;
    for (int r = 0; r < n_; ++r) {
      if (m.at(order[r], d) != m.at(order[block_start], d)) block_start = r;
      rank[order[r]] = r;
      dom[order[r]] = block_start;  // count of strictly smaller utilities
    }
  }
}

// Both closed forms reduce, per customer, to a prefix sum over the sorted
// utilities: the t-th largest strictly dominated facility of i sits at
// sorted position j = |L_id| - t, which makes the Shapley denominator
// lambda + lambda^2 = (n-j-1)(n-j) and the Banzhaf factor 2^(j-(n-1)),
// both independent of i.
std::vector<double> FastShapley(const UtilityMatrix& m) {
  const int n = m.num_facilities();
  const SortedDimensions dims(m);
  std::vector<double> phi(n, 0.0);
  std::vector<double> prefix(n + 1);
  for (int d = 0; d < m.num_customers(); ++d) {
    prefix[0] = 0.0;
    for (int j = 0; j < n; ++j) {
      const double term =
          j + 1 == n
              ? 0.0
              : m.at(dims.FacilityAtRank(d, j), d) /
                    (static_cast<double>(n - j - 1) * (n - j));
      prefix[j + 1] = prefix[j] + term;
    }
    for (int i = 0; i < n; ++i) {
      const int dom = dims.StrictlyDominatedCount(i, d);
      phi[i] += m.at(i, d) / (n - dom) - prefix[dom];
    }
  }
  return phi;
}

std::vector<double> FastBanzhaf(const UtilityMatrix& m) {
  const int n = m.num_facilities();
  const SortedDimensions dims(m);
  std::vector<double> phi(n, 0.0);
  std::vector<double> prefix(n + 1);
  for (int d = 0; d < m.num_customers(); ++d) {
    prefix[0] = 0.0;
    for (int j = 0; j < n; ++j) {
      prefix[j + 1] =
          prefix[j] + std::ldexp(m.at(dims.FacilityAtRank(d, j), d), j - (n - 1));
    }
    for (int i = 0; i < n; ++i) {
      const int dom = dims.StrictlyDominatedCount(i, d);
      phi[i] += std::ldexp(m.at(i, d), dom - (n - 1)) - prefix[dom];
    }
  }
  return phi;
}

}  // namespace semival
