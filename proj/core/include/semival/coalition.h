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

#ifndef SEMIVAL_COALITION_H_
#define SEMIVAL_COALITION_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace semival {

// A subset of the players {0, ..., n_players-1}, packed as a bit pattern
// (player i present iff bit i is set). Supports universes of up to 63
// players; exhaustive algorithms are separately capped well below that.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 63;

  Coalition() : bits_(0), n_players_(0) {}

  Coalition(uint64_t bits, int n_players) : bits_(bits), n_players_(n_players) {
    if (n_players < 0 || n_players > kMaxPlayers) {
      throw std::invalid_argument("Coalition: n_players out of range");
    }
    if (n_players < 64 && (bits >> n_players) != 0) {
      throw std::invalid_argument("Coalition: member index out of range");
    }
  }

  static Coalition Empty(int n_players) { return Coalition(0, n_players); }

  static Coalition Grand(int n_players) {
    return Coalition(n_players == 0 ? 0 : ((uint64_t{1} << n_players) - 1),
                     n_players);
  }

  static Coalition FromIndices(std::span<const int> members, int n_players) {
    uint64_t bits = 0;
    for (int i : members) {
      if (i < 0 || i >= n_players) {
        throw std::invalid_argument("Coalition: member index out of range");
      }
      bits |= uint64_t{1} << i;
    }
    return Coalition(bits, n_players);
  }

  static Coalition Of(std::initializer_list<int> members, int n_players) {
    return FromIndices(std::span<const int>(members.begin(), members.size()),
                       n_players);
  }

  uint64_t bits() const { return bits_; }
  int n_players() const { return n_players_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool Contains(int i) const {
    return i >= 0 && i < n_players_ && ((bits_ >> i) & 1) != 0;
  }

  Coalition With(int i) const {
    CheckIndex(i);
    return Coalition(bits_ | (uint64_t{1} << i), n_players_);
  }

  Coalition Without(int i) const {
    CheckIndex(i);
    return Coalition(bits_ & ~(uint64_t{1} << i), n_players_);
  }

  bool IsSubsetOf(const Coalition& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> Members() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < n_players_; ++i) {
      if ((bits_ >> i) & 1) out.push_back(i);
    }
    return out;
  }

  std::string ToString() const {
    std::string s = "{";
    bool first = true;
    for (int i : Members()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.bits_ == b.bits_ && a.n_players_ == b.n_players_;
  }

 private:
  void CheckIndex(int i) const {
    if (i < 0 || i >= n_players_) {
      throw std::invalid_argument("Coalition: player index out of range");
    }
  }

  uint64_t bits_;
  int n_players_;
};

}  // namespace semival

#endif  // SEMIVAL_COALITION_H_
