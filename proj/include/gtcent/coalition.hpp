/*
 * Copyright 2026 The gtcent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef GTCENT_COALITION_HPP_
#define GTCENT_COALITION_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gtcent/errors.hpp"

namespace gtcent {

using NodeId = int;

// A set of at most 64 players stored as a bitmask. Player i is bit i.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 64;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }

  static constexpr Coalition empty() { return Coalition(); }
  static constexpr Coalition full(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0}
                             : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr Coalition singleton(int i) {
    return Coalition(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr Coalition with(int i) const {
    return Coalition(bits_ | (std::uint64_t{1} << i));
  }
  constexpr Coalition without(int i) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << i));
  }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Coalition other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Visits every subset of `mask` (including the empty set and `mask` itself).
template <typename F>
void for_each_subset(Coalition mask, F&& f) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = m;
  while (true) {
    f(Coalition(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// Sequence of distinct players; position matters.
using OrderedCoalition = std::vector<int>;

inline Coalition to_coalition(const OrderedCoalition& pi) {
  Coalition c;
  for (int i : pi) c.insert(i);
  return c;
}

// Binomial coefficient as a double; exact for every value below 2^53.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r < 9e15 ? std::round(r) : r;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// |C|! (n - |C| - 1)! / n!, the probability that exactly the players of a
// fixed coalition of size k precede a given player in a uniform order.
inline double shapley_weight(int n, int k) {
  return 1.0 / (static_cast<double>(n) * binomial(n - 1, k));
}

// Distribution over coalition sizes 0..n-1 that defines a semivalue.
using SemivalueWeights = std::vector<double>;

inline SemivalueWeights shapley_weights(int n) {
  return SemivalueWeights(static_cast<std::size_t>(n), 1.0 / n);
}

inline SemivalueWeights banzhaf_weights(int n) {
  SemivalueWeights w(static_cast<std::size_t>(n));
  const double denom = std::ldexp(1.0, n - 1);
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] =
      binomial(n - 1, k) / denom;
  return w;
}

// Point mass at size k.
inline SemivalueWeights point_weights(int n, int k) {
  require(k >= 0 && k < n, "point semivalue size out of range");
  SemivalueWeights w(static_cast<std::size_t>(n), 0.0);
  w[static_cast<std::size_t>(k)] = 1.0;
  return w;
}

inline void validate_weights(const SemivalueWeights& w, int n,
                             const std::string& what = "semivalue weights") {
  require(static_cast<int>(w.size()) == n,
          what + ": expected " + std::to_string(n) + " entries, got " +
              std::to_string(w.size()));
  double total = 0.0;
  for (double x : w) {
    require(std::isfinite(x) && x >= 0.0, what + ": negative or non-finite");
    total += x;
  }
  require(std::abs(total - 1.0) <= 1e-9,
          what + ": weights must sum to 1");
}

}  // namespace gtcent

#endif  // GTCENT_COALITION_HPP_
