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


#ifndef GTCENT_GRAPH_ALGORITHMS_HPP_
#define GTCENT_GRAPH_ALGORITHMS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/graph.hpp"

namespace gtcent {

// Absolute tolerance used when comparing path lengths.
inline constexpr double kPathTolerance = 1e-9;

inline bool same_length(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kPathTolerance;
}

inline std::vector<NodeId> neighbors(const Graph& g, NodeId v) {
  std::vector<NodeId> out;
  for (const Arc& a : g.out_arcs(v)) out.push_back(a.to);
  return out;
}

inline std::vector<NodeId> in_neighbors(const Graph& g, NodeId v) {
  std::vector<NodeId> out;
  for (const Arc& a : g.in_arcs(v)) out.push_back(a.to);
  return out;
}

// Bitmask of out-neighbours per node. Requires n <= 64.
inline std::vector<Coalition> out_masks(const Graph& g) {
  require_size(static_cast<std::size_t>(g.num_nodes()), 64,
               "bitset adjacency");
  std::vector<Coalition> m(static_cast<std::size_t>(g.num_nodes()));
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (const Arc& a : g.out_arcs(v)) m[v].insert(a.to);
  }
  return m;
}

inline std::vector<Coalition> in_masks(const Graph& g) {
  require_size(static_cast<std::size_t>(g.num_nodes()), 64,
               "bitset adjacency");
  std::vector<Coalition> m(static_cast<std::size_t>(g.num_nodes()));
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (const Arc& a : g.in_arcs(v)) m[v].insert(a.to);
  }
  return m;
}

// Neighbours ignoring arc direction.
inline std::vector<Coalition> undirected_masks(const Graph& g) {
  auto m = out_masks(g);
  if (g.directed()) {
    auto in = in_masks(g);
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = m[v] | in[v];
  }
  return m;
}

// E(C): union of the members' out-neighbours, minus C itself.
inline Coalition neighbor_set(const Graph& g, Coalition c) {
  require(c.subset_of(Coalition::full(g.num_nodes())),
          "coalition is not a subset of the node set");
  Coalition out;
  c.for_each([&](int v) {
    for (const Arc& a : g.out_arcs(v)) out.insert(a.to);
  });
  return out - c;
}

// Single-source distances; unreachable nodes get +infinity. With
// `reverse` set, distances are measured towards `s` along arcs.
inline std::vector<double> shortest_distances(const Graph& g, NodeId s,
                                              bool reverse = false) {
  const int n = g.num_nodes();
  require(s >= 0 && s < n, "unknown node id " + std::to_string(s));
  std::vector<double> dist(static_cast<std::size_t>(n), kInf);
  dist[s] = 0.0;
  auto arcs = [&](NodeId v) -> const std::vector<Arc>& {
    return reverse ? g.in_arcs(v) : g.out_arcs(v);
  };
  if (g.unit_weights()) {
    std::vector<NodeId> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (const Arc& a : arcs(u)) {
        if (std::isinf(dist[a.to])) {
          dist[a.to] = dist[u] + 1.0;
          queue.push_back(a.to);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0.0, s});
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Arc& a : arcs(u)) {
      const double nd = d + a.weight;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        heap.push({nd, a.to});
      }
    }
  }
  return dist;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw NumericalFailure("shortest-path count overflow");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw NumericalFailure("shortest-path count overflow");
  }
  return r;
}

// Shortest-path DAG rooted at one source (Brandes' forward phase).
struct ShortestPathTree {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<std::uint64_t> sigma;
  // Reachable nodes in non-decreasing distance order, source first.
  std::vector<NodeId> order;
  std::vector<std::vector<NodeId>> preds;
};

inline ShortestPathTree shortest_path_tree(const Graph& g, NodeId s,
                                           bool reverse = false) {
  const int n = g.num_nodes();
  require(s >= 0 && s < n, "unknown node id " + std::to_string(s));
  ShortestPathTree t;
  t.source = s;
  t.dist.assign(static_cast<std::size_t>(n), kInf);
  t.sigma.assign(static_cast<std::size_t>(n), 0);
  t.preds.assign(static_cast<std::size_t>(n), {});
  t.dist[s] = 0.0;
  t.sigma[s] = 1;
  auto arcs = [&](NodeId v) -> const std::vector<Arc>& {
    return reverse ? g.in_arcs(v) : g.out_arcs(v);
  };
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0.0, s});
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    t.order.push_back(u);
    for (const Arc& a : arcs(u)) {
      const NodeId v = a.to;
      if (done[v]) continue;
      const double nd = t.dist[u] + a.weight;
      if (nd < t.dist[v] - kPathTolerance) {
        t.dist[v] = nd;
        t.sigma[v] = t.sigma[u];
        t.preds[v].assign(1, u);
        heap.push({nd, v});
      } else if (same_length(nd, t.dist[v])) {
        t.sigma[v] = checked_add(t.sigma[v], t.sigma[u]);
        t.preds[v].push_back(u);
      }
    }
  }
  return t;
}

// All-pairs distances and shortest-path counts.
class ShortestPathTable {
 public:
  explicit ShortestPathTable(const Graph& g) : n_(g.num_nodes()) {
    const auto n = static_cast<std::size_t>(n_);
    dist_.assign(n * n, kInf);
    sigma_.assign(n * n, 0);
    for (NodeId s = 0; s < n_; ++s) {
      ShortestPathTree t = shortest_path_tree(g, s);
      for (NodeId v = 0; v < n_; ++v) {
        dist_[idx(s, v)] = t.dist[v];
        sigma_[idx(s, v)] = t.sigma[v];
      }
    }
  }

  int num_nodes() const { return n_; }
  double dist(NodeId s, NodeId t) const { return dist_[idx(s, t)]; }
  std::uint64_t sigma(NodeId s, NodeId t) const { return sigma_[idx(s, t)]; }

  bool on_shortest_path(NodeId s, NodeId t, NodeId v) const {
    const double d = dist(s, t);
    if (std::isinf(d)) return false;
    return same_length(dist(s, v) + dist(v, t), d);
  }

  // sigma_st(v): shortest s-t paths visiting v, endpoints included.
  std::uint64_t through(NodeId s, NodeId t, NodeId v) const {
    if (!on_shortest_path(s, t, v)) return 0;
    return checked_mul(sigma(s, v), sigma(v, t));
  }

 private:
  std::size_t idx(NodeId s, NodeId t) const {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(t);
  }

  int n_;
  std::vector<double> dist_;
  std::vector<std::uint64_t> sigma_;
};

inline ShortestPathTable count_shortest_paths(const Graph& g) {
  return ShortestPathTable(g);
}

// Nodes reachable from `s` inside the induced subgraph on `within`
// (following arcs), including s.
inline Coalition reachable_within(const std::vector<Coalition>& adj,
                                  Coalition within, NodeId s) {
  Coalition seen = Coalition::singleton(s);
  Coalition frontier = seen;
  while (!frontier.is_empty()) {
    Coalition next;
    frontier.for_each([&](int v) { next = next | adj[v]; });
    next = (next & within) - seen;
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

// Maximal connected blocks of G[C]; arcs are read as undirected edges.
inline std::vector<Coalition> components(const std::vector<Coalition>& adj,
                                         Coalition c) {
  std::vector<Coalition> blocks;
  Coalition rest = c;
  while (!rest.is_empty()) {
    Coalition block = reachable_within(adj, c, rest.lowest());
    blocks.push_back(block);
    rest = rest - block;
  }
  return blocks;
}

inline std::vector<Coalition> components(const Graph& g, Coalition c) {
  require(c.subset_of(Coalition::full(g.num_nodes())),
          "coalition is not a subset of the node set");
  return components(undirected_masks(g), c);
}

inline bool is_connected(const std::vector<Coalition>& adj, Coalition c) {
  if (c.is_empty()) return false;
  return reachable_within(adj, c, c.lowest()) == c;
}

// Component label per node over the whole graph (undirected reading).
inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<NodeId> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (const auto* arcs : {&g.out_arcs(u), &g.in_arcs(u)}) {
        for (const Arc& a : *arcs) {
          if (label[a.to] < 0) {
            label[a.to] = next;
            stack.push_back(a.to);
          }
        }
      }
    }
    ++next;
  }
  return label;
}

// Calls visit(S, E(S)) once for every connected node set S. Include/forbid
// depth-first search over a degree-sorted node order; arcs are read as
// undirected edges. Requires n <= 64.
template <typename Visit>
void enumerate_connected_subsets(const Graph& g, Visit&& visit) {
  const int n = g.num_nodes();
  const auto masks = undirected_masks(g);
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return masks[a].size() > masks[b].size();
  });
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) adj[v] = masks[v].members();

  // path holds (node, index of that node in its parent's adjacency list).
  std::vector<std::pair<NodeId, std::size_t>> path;
  std::function<void(Coalition, Coalition, Coalition, std::size_t)> rec =
      [&](Coalition s, Coalition x, Coalition xn, std::size_t start) {
        while (true) {
          if (path.empty()) {
            visit(s, xn);
            return;
          }
          const NodeId v = path.back().first;
          const auto& nbrs = adj[v];
          for (std::size_t it = start; it < nbrs.size(); ++it) {
            const NodeId u = nbrs[it];
            if (!s.contains(u) && !x.contains(u)) {
              path.push_back({u, it});
              const auto saved = path;
              rec(s.with(u), x, xn, 0);
              path = saved;
              path.pop_back();
              x.insert(u);
              xn.insert(u);
            } else if (x.contains(u)) {
              xn.insert(u);
            }
          }
          // Done with v: resume its parent just after v.
          const std::size_t at = path.back().second;
          path.pop_back();
          start = at + 1;
        }
      };
  Coalition forbidden;
  for (NodeId v : order) {
    path.assign(1, {v, 0});
    rec(Coalition::singleton(v), forbidden, Coalition(), 0);
    forbidden.insert(v);
  }
}

// Calls visit(path) for every simple directed path with at least
// `min_edges` arcs. Undirected edges are traversed both ways.
template <typename Visit>
void enumerate_simple_paths(const Graph& g, Visit&& visit,
                            int min_edges = 1) {
  const int n = g.num_nodes();
  std::vector<NodeId> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::function<void(NodeId)> extend = [&](NodeId u) {
    for (const Arc& a : g.out_arcs(u)) {
      if (on_path[a.to]) continue;
      path.push_back(a.to);
      on_path[a.to] = 1;
      if (static_cast<int>(path.size()) - 1 >= min_edges) visit(path);
      extend(a.to);
      on_path[a.to] = 0;
      path.pop_back();
    }
  };
  for (NodeId s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    if (min_edges <= 0) visit(path);
    extend(s);
    on_path[s] = 0;
  }
}

// Transitive closure of the arc relation. On digraphs E*(v,v) holds when v
// lies on a directed cycle; on undirected graphs the diagonal is false.
inline std::vector<std::vector<char>> reachability(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<std::vector<char>> reach(
      static_cast<std::size_t>(n),
      std::vector<char>(static_cast<std::size_t>(n), 0));
  for (NodeId s = 0; s < n; ++s) {
    std::vector<NodeId> stack;
    for (const Arc& a : g.out_arcs(s)) {
      if (!reach[s][a.to]) {
        reach[s][a.to] = 1;
        stack.push_back(a.to);
      }
    }
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (const Arc& a : g.out_arcs(u)) {
        if (!reach[s][a.to]) {
          reach[s][a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    if (!g.directed()) reach[s][s] = 0;
  }
  return reach;
}

}  // namespace gtcent

#endif  // GTCENT_GRAPH_ALGORITHMS_HPP_
