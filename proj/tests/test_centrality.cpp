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

#include "gtcent/centrality.hpp"
#include "gtcent/generators.hpp"
#include "support/oracles.hpp"

namespace gtcent {
namespace {

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, BetweennessMatchesPathEnumeration) {
  const int seed = GetParam();
  for (bool directed : {false, true}) {
    const Graph g = random_gnp(8, 0.35, seed, directed, seed % 2 ? 3 : 1);
    const auto m = oracle::to_matrix(g);
    const auto ordered = betweenness(g);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      EXPECT_NEAR(ordered[v], oracle::betweenness(m, v), 1e-9);
    }
    if (!directed) {
      const auto unordered = betweenness(g, PairMode::kUnordered);
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        EXPECT_NEAR(2.0 * unordered[v], ordered[v], 1e-9);
      }
    }
  }
}

TEST_P(RandomGraphs, StressMatchesPathEnumeration) {
  const int seed = GetParam();
  for (bool directed : {false, true}) {
    const Graph g = random_gnp(7, 0.4, seed + 30, directed, seed % 2 ? 2 : 1);
    const auto m = oracle::to_matrix(g);
    const auto plain = stress(g);
    const auto inclusive = stress(g, true);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const std::uint64_t s = std::uint64_t{1} << v;
      EXPECT_NEAR(plain[v], oracle::group_stress(m, s, false), 1e-9);
      EXPECT_NEAR(inclusive[v], oracle::group_stress(m, s, true), 1e-9);
    }
  }
}

TEST_P(RandomGraphs, ClosenessFamiliesMatchDistanceSums) {
  const int seed = GetParam();
  const Graph g = random_gnm(9, 14, seed + 60, false, 3);
  const auto d = oracle::all_pairs(oracle::to_matrix(g));
  bool connected = true;
  for (const auto& row : d) {
    for (double x : row) connected = connected && std::isfinite(x);
  }
  const auto harm = generalized_closeness(g, DistanceFunction::harmonic());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double h = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (u != v && std::isfinite(d[v][u])) h += 1.0 / d[v][u];
    }
    EXPECT_NEAR(harm[v], h, 1e-9);
  }
  if (!connected) {
    EXPECT_THROW(closeness(g), InvalidInput);
    return;
  }
  const auto cl = closeness(g);
  EXPECT_FALSE(cl.higher_is_better);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double s = 0.0;
    for (double x : d[v]) s += x;
    EXPECT_NEAR(cl[v], s, 1e-9);
  }
}

TEST_P(RandomGraphs, EigenvectorSatisfiesEigenEquation) {
  const int seed = GetParam();
  const Graph g = oracle::random_connected(10, 0.3, seed + 90);
  const auto x = eigenvector(g);
  const auto m = oracle::to_matrix(g);
  double norm = 0.0, lambda = 0.0;
  std::vector<double> ax(10, 0.0);
  for (int i = 0; i < 10; ++i) {
    norm += x[i] * x[i];
    EXPECT_GE(x[i], 0.0);
    for (int j = 0; j < 10; ++j) ax[i] += m.w[i][j] * x[j];
    lambda += x[i] * ax[i];
  }
  EXPECT_NEAR(norm, 1.0, 1e-9);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(ax[i], lambda * x[i], 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range(1, 11));

TEST(Centrality, DegreeFamilies) {
  const Graph g(4, {{0, 1, 2.0}, {0, 2, 1.5}, {2, 3, 1.0}}, false);
  EXPECT_EQ(degree(g).scores, (std::vector<double>{2, 1, 2, 1}));
  EXPECT_EQ(weighted_degree(g).scores, (std::vector<double>{3.5, 2.0, 2.5, 1.0}));
}

TEST(Centrality, StarEigenvectorRatio) {
  const auto x = eigenvector(star_graph(4));
  EXPECT_NEAR(x[0] / x[1], 2.0, 1e-8);
  EXPECT_NEAR(x[0], std::sqrt(0.5), 1e-8);
}

TEST(Centrality, PathBetweenness) {
  const auto b = betweenness(path_graph(5));
  EXPECT_EQ(b.scores, (std::vector<double>{0, 6, 8, 6, 0}));
}

TEST(Centrality, DistanceFunctions) {
  const auto ind = DistanceFunction::indicator(2.0);
  EXPECT_EQ(ind(0.0), 1.0);
  EXPECT_EQ(ind(2.0), 1.0);
  EXPECT_EQ(ind(3.0), 0.0);
  EXPECT_EQ(ind(kInf), 0.0);
  const auto h = DistanceFunction::harmonic();
  EXPECT_EQ(h(0.0), 0.0);
  EXPECT_EQ(h(4.0), 0.25);
  EXPECT_NEAR(DistanceFunction::exponential(0.5)(2.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(DistanceFunction::inverse_power(2.0)(3.0), 1.0 / 9.0, 1e-15);
  EXPECT_THROW(DistanceFunction::inverse_power(0.0), InvalidInput);
  EXPECT_THROW(DistanceFunction::indicator(-1.0), InvalidInput);
}

TEST(Centrality, EigenvectorRejectsDigraphs) {
  EXPECT_THROW(eigenvector(cycle_graph(4, true)), InvalidInput);
}

}  // namespace
}  // namespace gtcent
