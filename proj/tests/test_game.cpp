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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gtcent/coalition.hpp"
#include "gtcent/game.hpp"
#include "support/oracles.hpp"

namespace gtcent {
namespace {

TEST(Coalition, SetOperations) {
  const Coalition a{0, 2, 5};
  const Coalition b{2, 3};
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a | b, (Coalition{0, 2, 3, 5}));
  EXPECT_EQ(a & b, Coalition{2});
  EXPECT_EQ(a - b, (Coalition{0, 5}));
  EXPECT_TRUE(Coalition{2}.subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.lowest(), 0);
  EXPECT_EQ(a.with(1).size(), 4);
  EXPECT_EQ(a.without(0), (Coalition{2, 5}));
  EXPECT_EQ(a.members(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(Coalition::full(64).size(), 64);
}

TEST(Coalition, SubsetEnumerationVisitsAll) {
  const Coalition mask{1, 3, 4, 7};
  int count = 0;
  for_each_subset(mask, [&](Coalition s) {
    EXPECT_TRUE(s.subset_of(mask));
    ++count;
  });
  EXPECT_EQ(count, 16);
}

TEST(Coalition, BinomialsAndWeights) {
  EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
  EXPECT_DOUBLE_EQ(binomial(5, 7), 0.0);
  EXPECT_DOUBLE_EQ(factorial(6), 720.0);
  for (int n = 1; n <= 12; ++n) {
    for (const auto& w : {shapley_weights(n), banzhaf_weights(n), point_weights(n, n / 2)}) {
      double s = 0.0;
      for (double x : w) s += x;
      EXPECT_NEAR(s, 1.0, 1e-12);
      EXPECT_EQ(w.size(), static_cast<std::size_t>(n));
    }
  }
  EXPECT_THROW(validate_weights({0.5, 0.4}, 2, "beta"), InvalidInput);
  EXPECT_THROW(validate_weights({1.0}, 2, "beta"), InvalidInput);
}

TEST(Game, RejectsNonZeroEmptyValue) {
  EXPECT_THROW(CharacteristicFunction(3, [](Coalition) { return 1.0; }), InvalidInput);
  EXPECT_THROW(CharacteristicFunction::from_table(2, {0, 1, 2}), InvalidInput);
}

TEST(Game, MemoizedAgreesWithDirect) {
  int calls = 0;
  const CharacteristicFunction nu(6, [&calls](Coalition c) {
    ++calls;
    return static_cast<double>(c.size() * c.size());
  });
  const auto memo = nu.memoized();
  for (int round = 0; round < 2; ++round) {
    for (std::uint64_t s = 0; s < 64; ++s) EXPECT_DOUBLE_EQ(memo(Coalition(s)), nu(Coalition(s)));
  }
  EXPECT_THROW(CharacteristicFunction(30, [](Coalition) { return 0.0; }).tabulate(24),
               SizeLimitExceeded);
}

TEST(Game, DividendsRoundTrip) {
  for (int seed = 1; seed <= 10; ++seed) {
    const int n = 2 + seed % 5;
    const auto table = oracle::random_game(n, seed);
    const auto nu = CharacteristicFunction::from_table(n, table);
    const DividendTable d = harsanyi_dividends(nu);
    const auto back = from_dividends(d);
    for (std::uint64_t s = 0; s < table.size(); ++s) {
      EXPECT_NEAR(back(Coalition(s)), table[s], 1e-9);
      // nu(S) is the sum of dividends of subsets of S.
      double sum = 0.0;
      for_each_subset(Coalition(s), [&](Coalition t) { sum += d.delta[t.bits()]; });
      EXPECT_NEAR(sum, table[s], 1e-9);
    }
  }
}

TEST(Game, UnanimityHasSingleDividend) {
  const Coalition s{1, 3};
  const DividendTable d = harsanyi_dividends(unanimity_game(4, s));
  for (std::uint64_t t = 0; t < 16; ++t) {
    EXPECT_DOUBLE_EQ(d.delta[t], t == s.bits() ? 1.0 : 0.0);
  }
}

TEST(Game, SquareGameDividends) {
  const auto nu = symmetric_game(5, [](int k) { return static_cast<double>(k * k); });
  const DividendTable d = harsanyi_dividends(nu);
  for (std::uint64_t t = 1; t < 32; ++t) {
    const int k = std::popcount(t);
    EXPECT_DOUBLE_EQ(d.delta[t], k == 1 ? 1.0 : k == 2 ? 2.0 : 0.0);
  }
}

TEST(Game, GeneralizedDividendsRoundTrip) {
  // An order-sensitive game: value grows with the position-weighted sum.
  const GeneralizedCharacteristicFunction nu(4, [](const OrderedCoalition& pi) {
    double v = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) v += (i + 1.0) * (pi[i] + 1.0);
    return v;
  });
  const auto d = generalized_dividends(nu);
  const auto back = from_generalized_dividends(d);
  for (const OrderedCoalition& pi :
       {OrderedCoalition{0}, OrderedCoalition{2, 1}, OrderedCoalition{3, 0, 2},
        OrderedCoalition{1, 3, 0, 2}}) {
    EXPECT_NEAR(back(pi), nu(pi), 1e-9);
  }
}

TEST(Game, OrderInsensitiveDividendsDependOnlyOnSet) {
  const auto nu = symmetric_game(4, [](int k) { return static_cast<double>(k * k); });
  const auto d = generalized_dividends(order_insensitive(nu));
  // Each order of a pair only sees its own subsequences, so both orders
  // carry the full set dividend.
  EXPECT_DOUBLE_EQ(d.at({0}), 1.0);
  EXPECT_NEAR(d.at({0, 1}), 2.0, 1e-12);
  EXPECT_NEAR(d.at({1, 0}), 2.0, 1e-12);
  EXPECT_NEAR(d.at({0, 1, 2}), 0.0, 1e-12);
}

TEST(Game, PropertyChecks) {
  const auto square = symmetric_game(5, [](int k) { return static_cast<double>(k * k); });
  const auto p = property_checks(square);
  EXPECT_TRUE(p.superadditive);
  EXPECT_TRUE(p.convex);
  EXPECT_TRUE(p.symmetric);
  const auto root = symmetric_game(5, [](int k) { return std::sqrt(static_cast<double>(k)); });
  const auto q = property_checks(root);
  EXPECT_FALSE(q.superadditive);
  EXPECT_FALSE(q.convex);
  EXPECT_TRUE(q.symmetric);
  const auto add = additive_game({1.0, 2.0, 3.0});
  const auto r = property_checks(add);
  EXPECT_TRUE(r.superadditive);
  EXPECT_TRUE(r.convex);
  EXPECT_FALSE(r.symmetric);
}

}  // namespace
}  // namespace gtcent
