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


#ifndef GTCENT_GENERATORS_HPP_
#define GTCENT_GENERATORS_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gtcent/errors.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/random.hpp"

namespace gtcent {

// Uniform random graph with exactly m distinct edges (arcs when directed).
// Weights are 1, or uniform integers in [1, max_weight] when max_weight > 1.
inline Graph random_gnm(int n, std::size_t m, std::uint64_t seed,
                        bool directed = false, int max_weight = 1) {
  const double pairs = directed ? static_cast<double>(n) * (n - 1)
                                : static_cast<double>(n) * (n - 1) / 2.0;
  require(static_cast<double>(m) <= pairs, "too many edges requested");
  Rng rng(seed);
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (!directed && u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) continue;
    const double w =
        max_weight > 1
            ? 1.0 + static_cast<double>(rng.below(static_cast<std::uint64_t>(max_weight)))
            : 1.0;
    edges.push_back({u, v, w});
  }
  return Graph(n, edges, directed);
}

// Each possible edge present independently with probability p.
inline Graph random_gnp(int n, double p, std::uint64_t seed,
                        bool directed = false, int max_weight = 1) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || rng.uniform() >= p) continue;
      const double w =
          max_weight > 1
              ? 1.0 + static_cast<double>(rng.below(static_cast<std::uint64_t>(max_weight)))
              : 1.0;
      edges.push_back({u, v, w});
    }
  }
  return Graph(n, edges, directed);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, edges, false);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return Graph(n, edges, false);
}

// Node 0 is the centre.
inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return Graph(leaves + 1, edges, false);
}

inline Graph cycle_graph(int n, bool directed = false) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, edges, directed);
}

}  // namespace gtcent

#endif  // GTCENT_GENERATORS_HPP_
