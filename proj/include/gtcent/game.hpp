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


#ifndef GTCENT_GAME_HPP_
#define GTCENT_GAME_HPP_

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"

namespace gtcent {

// Default bounds for exhaustive routines; every routine takes an override.
inline constexpr std::size_t kSubsetBound = 24;
inline constexpr std::size_t kOrderedBound = 10;
inline constexpr std::size_t kPropertyBound = 16;

// A TU game on players 0..n-1. Evaluation is lazy; an optional memo caches
// values per coalition (n <= 26).
class CharacteristicFunction {
 public:
  using Eval = std::function<double(Coalition)>;

  CharacteristicFunction() = default;

  CharacteristicFunction(int n, Eval eval, bool memoize = false)
      : n_(n), eval_(std::move(eval)) {
    require(n >= 0 && n <= Coalition::kMaxPlayers,
            "player count must lie in [0, 64]");
    require(static_cast<bool>(eval_), "empty evaluation procedure");
    const double at_empty = eval_(Coalition());
    require(at_empty == 0.0, "characteristic function must vanish on the "
                             "empty coalition (got " +
                                 std::to_string(at_empty) + ")");
    if (memoize) enable_memo();
  }

  static CharacteristicFunction from_table(int n, std::vector<double> values) {
    require(n >= 0 && n <= 30, "table games support at most 30 players");
    require(values.size() == (std::size_t{1} << n),
            "table size must be 2^n");
    auto table = std::make_shared<const std::vector<double>>(std::move(values));
    return CharacteristicFunction(
        n, [table](Coalition c) { return (*table)[c.bits()]; });
  }

  int num_players() const { return n_; }
  Coalition grand() const { return Coalition::full(n_); }

  double operator()(Coalition c) const {
    if (memo_) {
      auto& slot = memo_->values[c.bits()];
      double v = slot.load(std::memory_order_relaxed);
      if (!std::isnan(v)) return v;
      v = eval_(c);
      slot.store(v, std::memory_order_relaxed);
      return v;
    }
    return eval_(c);
  }

  // Copy of this game that caches every evaluated coalition.
  CharacteristicFunction memoized() const {
    CharacteristicFunction copy = *this;
    copy.enable_memo();
    return copy;
  }

  // All 2^n values indexed by coalition bits.
  std::vector<double> tabulate(std::size_t bound = kSubsetBound) const {
    require_size(static_cast<std::size_t>(n_), bound, "coalition table");
    std::vector<double> t(std::size_t{1} << n_);
    for (std::uint64_t m = 0; m < t.size(); ++m) t[m] = (*this)(Coalition(m));
    return t;
  }

  // Equivalent game backed by a precomputed table.
  CharacteristicFunction tabulated(std::size_t bound = kSubsetBound) const {
    return from_table(n_, tabulate(bound));
  }

 private:
  struct Memo {
    explicit Memo(std::size_t size)
        : values(std::make_unique<std::atomic<double>[]>(size)) {
      for (std::size_t i = 0; i < size; ++i) {
        values[i].store(std::numeric_limits<double>::quiet_NaN(),
                        std::memory_order_relaxed);
      }
    }
    std::unique_ptr<std::atomic<double>[]> values;
  };

  void enable_memo() {
    require_size(static_cast<std::size_t>(n_), 26, "memo table");
    memo_ = std::make_shared<Memo>(std::size_t{1} << n_);
  }

  int n_ = 0;
  Eval eval_ = [](Coalition) { return 0.0; };
  std::shared_ptr<Memo> memo_;
};

inline CharacteristicFunction unanimity_game(int n, Coalition s) {
  require(!s.is_empty(), "unanimity game needs a non-empty carrier");
  return CharacteristicFunction(
      n, [s](Coalition c) { return s.subset_of(c) ? 1.0 : 0.0; });
}

inline CharacteristicFunction additive_game(std::vector<double> w) {
  const int n = static_cast<int>(w.size());
  return CharacteristicFunction(n, [w = std::move(w)](Coalition c) {
    double total = 0.0;
    c.for_each([&](int i) { total += w[i]; });
    return total;
  });
}

// nu(C) = f(|C|) with f(0) = 0.
inline CharacteristicFunction symmetric_game(int n,
                                             std::function<double(int)> f) {
  return CharacteristicFunction(
      n, [f = std::move(f)](Coalition c) { return f(c.size()); });
}

// Harsanyi dividends indexed by coalition bits.
struct DividendTable {
  int n = 0;
  std::vector<double> delta;

  double operator[](Coalition c) const { return delta[c.bits()]; }
};

// Subset Moebius transform: O(n 2^n).
inline DividendTable harsanyi_dividends(const CharacteristicFunction& nu,
                                        std::size_t bound = kSubsetBound) {
  DividendTable t{nu.num_players(), nu.tabulate(bound)};
  const std::uint64_t size = t.delta.size();
  for (int i = 0; i < t.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < size; ++m) {
      if (m & bit) t.delta[m] -= t.delta[m ^ bit];
    }
  }
  return t;
}

inline CharacteristicFunction from_dividends(const DividendTable& table) {
  require(table.n >= 0 && table.n <= 30 &&
              table.delta.size() == (std::size_t{1} << table.n),
          "dividend table is incomplete");
  require(table.delta[0] == 0.0, "dividend of the empty coalition must be 0");
  std::vector<double> v = table.delta;
  for (int i = 0; i < table.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] += v[m ^ bit];
    }
  }
  return CharacteristicFunction::from_table(table.n, std::move(v));
}

// A game over ordered coalitions (sequences of distinct players).
class GeneralizedCharacteristicFunction {
 public:
  using Eval = std::function<double(const OrderedCoalition&)>;

  GeneralizedCharacteristicFunction(int n, Eval eval)
      : n_(n), eval_(std::move(eval)) {
    require(n >= 0 && n <= Coalition::kMaxPlayers,
            "player count must lie in [0, 64]");
    require(eval_(OrderedCoalition{}) == 0.0,
            "generalised characteristic function must vanish on the empty "
            "sequence");
  }

  int num_players() const { return n_; }
  double operator()(const OrderedCoalition& pi) const { return eval_(pi); }

 private:
  int n_;
  Eval eval_;
};

// Lifts an ordinary game: the value ignores the order.
inline GeneralizedCharacteristicFunction order_insensitive(
    const CharacteristicFunction& nu) {
  return GeneralizedCharacteristicFunction(
      nu.num_players(),
      [nu](const OrderedCoalition& pi) { return nu(to_coalition(pi)); });
}

// Generalised dividends keyed by ordered coalition; absent keys are zero.
struct GeneralizedDividendTable {
  int n = 0;
  std::map<OrderedCoalition, double> delta;

  double at(const OrderedCoalition& pi) const {
    auto it = delta.find(pi);
    return it == delta.end() ? 0.0 : it->second;
  }
};

namespace detail {

inline std::uint64_t encode_sequence(const OrderedCoalition& pi) {
  std::uint64_t key = 0;
  for (int x : pi) key = (key << 4) | static_cast<std::uint64_t>(x + 1);
  return key;
}

// Visits every non-empty ordered coalition over n players.
template <typename F>
void for_each_ordered(int n, F&& f) {
  OrderedCoalition seq;
  Coalition used;
  std::function<void()> rec = [&]() {
    for (int i = 0; i < n; ++i) {
      if (used.contains(i)) continue;
      seq.push_back(i);
      used.insert(i);
      f(static_cast<const OrderedCoalition&>(seq));
      rec();
      used.erase(i);
      seq.pop_back();
    }
  };
  rec();
}

}  // namespace detail

// Moebius inversion over the order-preserving subsequence relation: the
// dividend of pi is the alternating sum of nu* over all subsequences of pi.
inline GeneralizedDividendTable generalized_dividends(
    const GeneralizedCharacteristicFunction& nu,
    std::size_t bound = kOrderedBound) {
  const int n = nu.num_players();
  require_size(static_cast<std::size_t>(n), std::min<std::size_t>(bound, 15),
               "ordered-coalition enumeration");
  std::unordered_map<std::uint64_t, double> value;
  value[0] = 0.0;
  detail::for_each_ordered(n, [&](const OrderedCoalition& pi) {
    value[detail::encode_sequence(pi)] = nu(pi);
  });
  GeneralizedDividendTable table{n, {}};
  OrderedCoalition sub;
  detail::for_each_ordered(n, [&](const OrderedCoalition& pi) {
    const int k = static_cast<int>(pi.size());
    double d = 0.0;
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      std::uint64_t key = 0;
      for (int p = 0; p < k; ++p) {
        if (mask & (1U << p)) {
          key = (key << 4) | static_cast<std::uint64_t>(pi[p] + 1);
        }
      }
      const int missing = k - std::popcount(mask);
      d += (missing % 2 == 0 ? 1.0 : -1.0) * value[key];
    }
    if (d != 0.0) table.delta.emplace(pi, d);
  });
  return table;
}

// nu*(pi) = sum of dividends over the subsequences of pi.
inline GeneralizedCharacteristicFunction from_generalized_dividends(
    GeneralizedDividendTable table) {
  auto shared = std::make_shared<const GeneralizedDividendTable>(
      std::move(table));
  return GeneralizedCharacteristicFunction(
      shared->n, [shared](const OrderedCoalition& pi) {
        double total = 0.0;
        for (const auto& [sigma, d] : shared->delta) {
          std::size_t j = 0;
          for (int x : pi) {
            if (j < sigma.size() && sigma[j] == x) ++j;
          }
          if (j == sigma.size()) total += d;
        }
        return total;
      });
}

struct GameProperties {
  bool superadditive = false;
  bool convex = false;
  bool symmetric = false;
};

// Exhaustive checks with absolute tolerance `tol`.
inline GameProperties property_checks(const CharacteristicFunction& nu,
                                      double tol = 1e-9,
                                      std::size_t bound = kPropertyBound) {
  const int n = nu.num_players();
  const auto v = nu.tabulate(bound);
  const std::uint64_t full = Coalition::full(n).bits();
  GameProperties p{true, true, true};
  for (std::uint64_t s = 0; s <= full && p.superadditive; ++s) {
    const std::uint64_t rest = full & ~s;
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      if (v[s | t] < v[s] + v[t] - tol) {
        p.superadditive = false;
        break;
      }
      if (t == 0) break;
    }
  }
  // Supermodularity reduces to non-negative second differences.
  for (std::uint64_t s = 0; s <= full && p.convex; ++s) {
    for (int i = 0; i < n && p.convex; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        if (v[s | bi | bj] - v[s | bi] - v[s | bj] + v[s] < -tol) {
          p.convex = false;
          break;
        }
      }
    }
  }
  std::vector<double> by_size(static_cast<std::size_t>(n) + 1,
                              std::numeric_limits<double>::quiet_NaN());
  for (std::uint64_t s = 0; s <= full; ++s) {
    const int k = std::popcount(s);
    if (std::isnan(by_size[k])) {
      by_size[k] = v[s];
    } else if (std::abs(by_size[k] - v[s]) > tol) {
      p.symmetric = false;
      break;
    }
  }
  return p;
}

}  // namespace gtcent

#endif  // GTCENT_GAME_HPP_
