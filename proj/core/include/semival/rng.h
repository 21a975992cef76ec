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

#ifndef SEMIVAL_RNG_H_
#define SEMIVAL_RNG_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace semival {

// Deterministic random source. All draws are derived from the mt19937_64
// output stream directly (no std::*_distribution), so a given seed produces
// the same sequence on every platform and toolchain.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t NextU64() { return gen_(); }

  // Uniform integer in [lo, hi], inclusive. Modulo reduction; the bias is
  // below 2^-50 for the ranges used here.
  int64_t NextInt(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::NextInt: empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(gen_() % span);
  }

  // Uniform double in [0, 1).
  double NextUnit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // k distinct indices drawn uniformly from [0, n), via partial
  // Fisher-Yates. Order of the result is the draw order.
  std::vector<int> SampleWithoutReplacement(int n, int k) {
    if (k < 0 || k > n) {
      throw std::invalid_argument("SampleWithoutReplacement: bad k");
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) {
      const int64_t pick = NextInt(j, n - 1);
      std::swap(pool[j], pool[pick]);
      out[j] = pool[j];
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace semival

#endif  // SEMIVAL_RNG_H_
