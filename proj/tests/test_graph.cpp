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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtcent/generators.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/graph_algorithms.hpp"
#include "support/oracles.hpp"

namespace gtcent {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

TEST(Graph, BuildsUndirectedAdjacency) {
  const Graph g = graph_from_labels(Pairs{{"a", "b"}, {"b", "c"}}, false);
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_FALSE(g.directed());
  EXPECT_TRUE(g.unit_weights());
  const NodeId a = g.id("a"), b = g.id("b"), c = g.id("c");
  EXPECT_TRUE(g.has_arc(a, b));
  EXPECT_TRUE(g.has_arc(b, a));
  EXPECT_FALSE(g.has_arc(a, c));
  EXPECT_EQ(g.out_arcs(b).size(), 2u);
  EXPECT_EQ(g.label(c), "c");
  EXPECT_FALSE(g.find("zzz").has_value());
}

TEST(Graph, DirectedArcsAreOneWay) {
  const Graph g = graph_from_labels(Pairs{{"1", "2"}, {"2", "3"}}, true);
  EXPECT_TRUE(g.has_arc(g.id("1"), g.id("2")));
  EXPECT_FALSE(g.has_arc(g.id("2"), g.id("1")));
  EXPECT_EQ(g.in_arcs(g.id("2")).size(), 1u);
  const Graph r = g.reversed();
  EXPECT_TRUE(r.has_arc(r.id("2"), r.id("1")));
  const Graph u = g.undirected_view();
  EXPECT_FALSE(u.directed());
  EXPECT_EQ(u.num_edges(), 2u);
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(2, {{0, 0, 1.0}}, false), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 1, 0.0}}, false), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 1, -2.0}}, false), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 5, 1.0}}, false), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 1, 1.0}, {1, 0, 2.0}}, false), InvalidInput);
  EXPECT_THROW(Graph(2, {}, false, {"x", "x"}), InvalidInput);
}

TEST(Graph, MergesIdenticalDuplicates) {
  const Graph g(3, {{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 2.0}}, false);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.arc_weight(2, 1), 2.0);
  EXPECT_FALSE(g.unit_weights());
}

TEST(Generators, GnmHasExactEdgeCountAndIsDeterministic) {
  const Graph a = random_gnm(50, 120, 9);
  const Graph b = random_gnm(50, 120, 9);
  EXPECT_EQ(a.num_edges(), 120u);
  ASSERT_EQ(a.edges().size(), b.edges().size());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
  }
  EXPECT_THROW(random_gnm(4, 7, 1), InvalidInput);
}

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, DistancesMatchFloydWarshall) {
  const int seed = GetParam();
  for (bool directed : {false, true}) {
    const Graph g = random_gnp(9, 0.3, seed, directed, seed % 2 ? 4 : 1);
    const auto ref = oracle::all_pairs(oracle::to_matrix(g));
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      const auto d = shortest_distances(g, s);
      for (NodeId t = 0; t < g.num_nodes(); ++t) EXPECT_DOUBLE_EQ(d[t], ref[s][t]);
      const auto back = shortest_distances(g, s, true);
      for (NodeId t = 0; t < g.num_nodes(); ++t) EXPECT_DOUBLE_EQ(back[t], ref[t][s]);
    }
  }
}

TEST_P(RandomGraphs, PathCountsMatchEnumeration) {
  const int seed = GetParam();
  for (bool directed : {false, true}) {
    const Graph g = random_gnp(8, 0.35, seed + 100, directed, seed % 3 == 0 ? 3 : 1);
    const auto m = oracle::to_matrix(g);
    const ShortestPathTable table = count_shortest_paths(g);
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      for (NodeId t = 0; t < g.num_nodes(); ++t) {
        if (s == t) continue;
        const auto sp = oracle::shortest_paths(m, s, t);
        EXPECT_EQ(table.sigma(s, t), sp.size());
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          std::uint64_t via = 0;
          for (const auto& p : sp) via += oracle::touches(p, std::uint64_t{1} << v);
          EXPECT_EQ(table.through(s, t, v), via);
        }
      }
    }
  }
}

TEST_P(RandomGraphs, ConnectedSubsetsEnumeratedOnce) {
  const int seed = GetParam();
  const Graph g = random_gnp(8, 0.3, seed + 200);
  const auto m = oracle::to_matrix(g);
  std::set<std::uint64_t> seen;
  enumerate_connected_subsets(g, [&](Coalition s, Coalition boundary) {
    EXPECT_TRUE(seen.insert(s.bits()).second);
    EXPECT_EQ(boundary, neighbor_set(g, s));
  });
  std::size_t expected = 0;
  for (std::uint64_t s = 1; s < 256; ++s) expected += oracle::connected(m, s) ? 1 : 0;
  EXPECT_EQ(seen.size(), expected);
}

TEST_P(RandomGraphs, SimplePathsMatchEnumeration) {
  const int seed = GetParam();
  for (bool directed : {false, true}) {
    const Graph g = random_gnp(7, 0.35, seed + 300, directed);
    const auto m = oracle::to_matrix(g);
    std::size_t expected = 0;
    for (int s = 0; s < m.n; ++s) {
      for (int t = 0; t < m.n; ++t) {
        if (s != t) expected += oracle::simple_paths(m, s, t).size();
      }
    }
    std::size_t count = 0;
    enumerate_simple_paths(g, [&](const std::vector<NodeId>& p) {
      ++count;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.has_arc(p[i], p[i + 1]));
    });
    EXPECT_EQ(count, expected);
  }
}

TEST_P(RandomGraphs, ComponentsMatchUnionFind) {
  const int seed = GetParam();
  const Graph g = random_gnp(10, 0.15, seed + 400);
  const auto m = oracle::to_matrix(g);
  const auto adj = undirected_masks(g);
  for (std::uint64_t s : {0x3FFull, 0x155ull, 0x2AAull, 0x0F0ull}) {
    auto ours = components(adj, Coalition(s));
    auto ref = oracle::components(m, s);
    std::set<std::uint64_t> a, b(ref.begin(), ref.end());
    for (Coalition c : ours) a.insert(c.bits());
    EXPECT_EQ(a, b);
    EXPECT_EQ(is_connected(adj, Coalition(s)), ref.size() == 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range(1, 13));

TEST(GraphAlgorithms, ReachabilityDiagonal) {
  const Graph cyc = cycle_graph(3, true);
  const auto r = reachability(cyc);
  EXPECT_TRUE(r[0][0]);
  EXPECT_TRUE(r[0][2]);
  const Graph p = path_graph(3);
  const auto q = reachability(p);
  EXPECT_FALSE(q[0][0]);
  EXPECT_TRUE(q[2][0]);
}

TEST(GraphAlgorithms, ReachableWithinRespectsCoalition) {
  const Graph p = path_graph(4);
  const auto adj = out_masks(p);
  EXPECT_EQ(reachable_within(adj, Coalition{0, 1, 3}, 0), (Coalition{0, 1}));
  EXPECT_EQ(reachable_within(adj, Coalition::full(4), 0), Coalition::full(4));
}

TEST(GraphAlgorithms, ConnectedSubsetCountsOnKnownFamilies) {
  // A path on n nodes has n(n+1)/2 connected subsets; K_n has 2^n - 1.
  for (int n = 1; n <= 8; ++n) {
    std::size_t path = 0, clique = 0;
    enumerate_connected_subsets(path_graph(n), [&](Coalition, Coalition) { ++path; });
    enumerate_connected_subsets(complete_graph(n), [&](Coalition, Coalition) { ++clique; });
    EXPECT_EQ(path, static_cast<std::size_t>(n * (n + 1) / 2));
    EXPECT_EQ(clique, (std::size_t{1} << n) - 1);
  }
}

}  // namespace
}  // namespace gtcent
