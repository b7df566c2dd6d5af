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


#ifndef GTCENT_VALUE_FUNCTIONS_HPP_
#define GTCENT_VALUE_FUNCTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/game.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/graph_algorithms.hpp"

namespace gtcent {

// Group centralities and restricted games. Each builder precomputes what it
// needs from the graph and returns a pure evaluator over node coalitions.

inline CharacteristicFunction group_degree(const Graph& g) {
  auto adj = std::make_shared<const std::vector<Coalition>>(out_masks(g));
  return CharacteristicFunction(g.num_nodes(), [adj](Coalition c) {
    Coalition reach;
    c.for_each([&](int v) { reach = reach | (*adj)[v]; });
    return static_cast<double>((reach - c).size());
  });
}

namespace detail {

struct PathCounter {
  std::vector<ShortestPathTree> trees;
  bool include_endpoints = false;
  bool fractional = true;
  double scale = 1.0;

  double operator()(Coalition c) const {
    const std::size_t n = trees.size();
    std::vector<double> avoid(n);
    double total = 0.0;
    for (const ShortestPathTree& t : trees) {
      const NodeId s = t.source;
      if (!include_endpoints && c.contains(s)) continue;
      for (NodeId v : t.order) {
        if (v == s) {
          avoid[v] = c.contains(s) ? 0.0 : 1.0;
        } else if (c.contains(v)) {
          avoid[v] = 0.0;
        } else {
          double a = 0.0;
          for (NodeId p : t.preds[v]) a += avoid[p];
          avoid[v] = a;
        }
      }
      for (NodeId v : t.order) {
        if (!include_endpoints && (v == s || c.contains(v))) continue;
        const auto sigma = static_cast<double>(t.sigma[v]);
        const double hit = sigma - avoid[v];
        total += fractional ? hit / sigma : hit;
      }
    }
    return total * scale;
  }
};

inline std::vector<ShortestPathTree> all_trees(const Graph& g) {
  require_size(static_cast<std::size_t>(g.num_nodes()), 64,
               "group path-count game");
  std::vector<ShortestPathTree> trees;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    trees.push_back(shortest_path_tree(g, s));
  }
  return trees;
}

}  // namespace detail

// Share of shortest s-t paths that visit the group, summed over ordered
// pairs. By default pairs with s or t in the group are skipped; with
// endpoints included every pair (s, t) of V counts, s = t as well.
inline CharacteristicFunction group_betweenness(
    const Graph& g, bool include_endpoints = false,
    PairMode mode = PairMode::kOrdered) {
  detail::PathCounter pc{detail::all_trees(g), include_endpoints, true,
                         mode == PairMode::kUnordered ? 0.5 : 1.0};
  return CharacteristicFunction(g.num_nodes(), std::move(pc));
}

// Raw number of shortest paths visiting the group.
inline CharacteristicFunction group_stress(const Graph& g,
                                           bool include_endpoints = false,
                                           PairMode mode = PairMode::kOrdered) {
  detail::PathCounter pc{detail::all_trees(g), include_endpoints, false,
                         mode == PairMode::kUnordered ? 0.5 : 1.0};
  return CharacteristicFunction(g.num_nodes(), std::move(pc));
}

namespace detail {

inline std::shared_ptr<const std::vector<std::vector<double>>> distance_matrix(
    const Graph& g) {
  require_size(static_cast<std::size_t>(g.num_nodes()), 64,
               "coalition distance game");
  auto d = std::make_shared<std::vector<std::vector<double>>>();
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    d->push_back(shortest_distances(g, s));
  }
  return d;
}

inline double distance_from(const std::vector<std::vector<double>>& d,
                            Coalition c, NodeId v) {
  double best = kInf;
  c.for_each([&](int u) { best = std::min(best, d[u][v]); });
  return best;
}

}  // namespace detail

// Sum over outside nodes of the distance from the group; evaluating a
// coalition that cannot reach every node is an error.
inline CharacteristicFunction group_closeness(const Graph& g) {
  auto d = detail::distance_matrix(g);
  const int n = g.num_nodes();
  return CharacteristicFunction(n, [d, n](Coalition c) {
    if (c.is_empty()) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (c.contains(v)) continue;
      const double x = detail::distance_from(*d, c, v);
      if (std::isinf(x)) {
        throw InvalidInput("group closeness: node unreachable from group");
      }
      total += x;
    }
    return total;
  });
}

// Influence game: sum over outside nodes of f(dist(group, node)).
inline CharacteristicFunction group_closeness_general(const Graph& g,
                                                      DistanceFunction f) {
  auto d = detail::distance_matrix(g);
  const int n = g.num_nodes();
  return CharacteristicFunction(n, [d, n, f = std::move(f)](Coalition c) {
    if (c.is_empty()) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (!c.contains(v)) total += f(detail::distance_from(*d, c, v));
    }
    return total;
  });
}

// g1: size of the fringe, the group together with its out-neighbours.
inline CharacteristicFunction fringe_game(const Graph& g) {
  auto adj = std::make_shared<const std::vector<Coalition>>(out_masks(g));
  return CharacteristicFunction(g.num_nodes(), [adj](Coalition c) {
    Coalition reach = c;
    c.for_each([&](int v) { reach = reach | (*adj)[v]; });
    return static_cast<double>(reach.size());
  });
}

// g2: members plus nodes with at least k in-neighbours in the group.
inline CharacteristicFunction threshold_fringe_game(const Graph& g, int k) {
  require(k >= 1, "g2 threshold k must be at least 1");
  auto in = std::make_shared<const std::vector<Coalition>>(in_masks(g));
  const int n = g.num_nodes();
  return CharacteristicFunction(n, [in, n, k](Coalition c) {
    if (c.is_empty()) return 0.0;
    int count = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (c.contains(v) || ((*in)[v] & c).size() >= k) ++count;
    }
    return static_cast<double>(count);
  });
}

// g4: sum over every node of f(dist(group, node)), members at distance 0.
inline CharacteristicFunction distance_game(const Graph& g,
                                            DistanceFunction f) {
  auto d = detail::distance_matrix(g);
  const int n = g.num_nodes();
  return CharacteristicFunction(n, [d, n, f = std::move(f)](Coalition c) {
    if (c.is_empty()) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      total += c.contains(v) ? f(0.0) : f(detail::distance_from(*d, c, v));
    }
    return total;
  });
}

// g3: nodes within the cutoff distance of the group (members included).
inline CharacteristicFunction cutoff_game(const Graph& g, double cutoff) {
  return distance_game(g, DistanceFunction::indicator(cutoff));
}

// g5: members plus nodes whose incoming weight from the group reaches
// their threshold.
inline CharacteristicFunction influence_threshold_game(
    const Graph& g, std::vector<double> thresholds) {
  const int n = g.num_nodes();
  require(static_cast<int>(thresholds.size()) == n,
          "one influence threshold per node is required");
  for (double w : thresholds) require(w > 0.0, "thresholds must be positive");
  require_size(static_cast<std::size_t>(n), 64, "influence game");
  auto graph = std::make_shared<const Graph>(g);
  return CharacteristicFunction(
      n, [graph, n, thresholds = std::move(thresholds)](Coalition c) {
        if (c.is_empty()) return 0.0;
        int count = 0;
        for (NodeId v = 0; v < n; ++v) {
          if (c.contains(v)) {
            ++count;
            continue;
          }
          double w = 0.0;
          for (const Arc& a : graph->in_arcs(v)) {
            if (c.contains(a.to)) w += a.weight;
          }
          if (w >= thresholds[v] - kPathTolerance) ++count;
        }
        return static_cast<double>(count);
      });
}

// Score game of a digraph: number of nodes dominated by the group.
inline CharacteristicFunction score_game(const Graph& d) {
  require(d.directed(), "score game needs a directed graph");
  auto adj = std::make_shared<const std::vector<Coalition>>(out_masks(d));
  return CharacteristicFunction(d.num_nodes(), [adj](Coalition c) {
    Coalition reach;
    c.for_each([&](int v) { reach = reach | (*adj)[v]; });
    return static_cast<double>(reach.size());
  });
}

// Graph-restricted game: a coalition is worth the sum over its connected
// components.
inline CharacteristicFunction myerson_restriction(
    const CharacteristicFunction& nu, const Graph& g) {
  require(nu.num_players() == g.num_nodes(),
          "game and graph must have the same players");
  auto adj = std::make_shared<const std::vector<Coalition>>(undirected_masks(g));
  return CharacteristicFunction(g.num_nodes(), [nu, adj](Coalition c) {
    double total = 0.0;
    for (Coalition k : components(*adj, c)) total += nu(k);
    return total;
  });
}

// f(S) on connected coalitions, 0 otherwise; f = 1 by default.
inline CharacteristicFunction connectivity_game(
    const Graph& g, std::function<double(Coalition)> f = nullptr) {
  auto adj = std::make_shared<const std::vector<Coalition>>(undirected_masks(g));
  if (!f) f = [](Coalition) { return 1.0; };
  return CharacteristicFunction(g.num_nodes(), [adj, f](Coalition c) {
    return is_connected(*adj, c) ? f(c) : 0.0;
  });
}

// 2(|C| - number of components of G[C]).
inline CharacteristicFunction attachment_game(const Graph& g) {
  auto adj = std::make_shared<const std::vector<Coalition>>(undirected_masks(g));
  return CharacteristicFunction(g.num_nodes(), [adj](Coalition c) {
    const auto blocks = components(*adj, c);
    return 2.0 * static_cast<double>(c.size() - static_cast<int>(blocks.size()));
  });
}

// True when some member of C is reachable from every member inside G[C].
inline std::vector<char> weakly_connected_table(const Graph& g,
                                                std::size_t bound = 20) {
  const int n = g.num_nodes();
  require_size(static_cast<std::size_t>(n), bound, "weak-connectivity table");
  const auto rev = in_masks(g);
  std::vector<char> wc(std::size_t{1} << n, 0);
  for (std::uint64_t m = 1; m < wc.size(); ++m) {
    const Coalition c(m);
    c.for_each([&](int v) {
      if (!wc[m] && reachable_within(rev, c, v) == c) wc[m] = 1;
    });
  }
  return wc;
}

// Best split of each coalition into weakly connected parts, by subset
// dynamic programming over decompositions that fix the lowest member.
inline CharacteristicFunction kt_restriction(const CharacteristicFunction& nu,
                                             const Graph& d,
                                             std::size_t bound = 20) {
  const int n = d.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  const auto wc = weakly_connected_table(d, bound);
  std::vector<double> best(wc.size(), 0.0);
  for (std::uint64_t m = 1; m < best.size(); ++m) {
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t rest = m ^ low;
    double top = -kInf;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      const std::uint64_t part = s | low;
      if (wc[part]) top = std::max(top, nu(Coalition(part)) + best[m ^ part]);
      if (s == 0) break;
    }
    best[m] = top;
  }
  return CharacteristicFunction::from_table(n, std::move(best));
}

namespace detail {

inline std::shared_ptr<const std::vector<Coalition>> arc_masks(const Graph& d) {
  return std::make_shared<const std::vector<Coalition>>(out_masks(d));
}

inline void check_sequence(const OrderedCoalition& pi, int n) {
  Coalition seen;
  for (int x : pi) {
    require(x >= 0 && x < n, "ordered coalition contains unknown player");
    require(!seen.contains(x), "ordered coalition repeats a player");
    seen.insert(x);
  }
}

}  // namespace detail

// Sum of nu over the maximal runs of consecutive arcs of the sequence.
inline GeneralizedCharacteristicFunction ag_digraph_restriction(
    const CharacteristicFunction& nu, const Graph& d) {
  const int n = d.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  auto arcs = detail::arc_masks(d);
  return GeneralizedCharacteristicFunction(
      n, [nu, arcs, n](const OrderedCoalition& pi) {
        detail::check_sequence(pi, n);
        double total = 0.0;
        Coalition run;
        for (std::size_t k = 0; k < pi.size(); ++k) {
          if (k > 0 && !(*arcs)[pi[k - 1]].contains(pi[k])) {
            total += nu(run);
            run = Coalition();
          }
          run.insert(pi[k]);
        }
        if (!run.is_empty()) total += nu(run);
        return total;
      });
}

// Generalised dividends of the path-restricted game: Harsanyi dividend of
// the node set on every directed simple path (single nodes included).
inline GeneralizedDividendTable pozo_dividends(const CharacteristicFunction& nu,
                                               const Graph& d,
                                               std::size_t bound = kSubsetBound) {
  const int n = d.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  const DividendTable delta = harsanyi_dividends(nu, bound);
  GeneralizedDividendTable t{n, {}};
  enumerate_simple_paths(
      d,
      [&](const std::vector<NodeId>& path) {
        const double value = delta[to_coalition(path)];
        if (value != 0.0) t.delta.emplace(path, value);
      },
      0);
  return t;
}

// Each subsequence of the ordered coalition that is a directed path in D
// contributes the Harsanyi dividend of its node set.
inline GeneralizedCharacteristicFunction pozo_digraph_restriction(
    const CharacteristicFunction& nu, const Graph& d,
    std::size_t bound = kSubsetBound) {
  const int n = d.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  auto delta = std::make_shared<const DividendTable>(harsanyi_dividends(nu, bound));
  auto arcs = detail::arc_masks(d);
  return GeneralizedCharacteristicFunction(
      n, [delta, arcs, n](const OrderedCoalition& pi) {
        detail::check_sequence(pi, n);
        double total = 0.0;
        std::function<void(std::size_t, Coalition)> extend =
            [&](std::size_t at, Coalition used) {
              total += (*delta)[used];
              for (std::size_t k = at + 1; k < pi.size(); ++k) {
                if ((*arcs)[pi[at]].contains(pi[k])) {
                  extend(k, used.with(pi[k]));
                }
              }
            };
        for (std::size_t k = 0; k < pi.size(); ++k) {
          extend(k, Coalition::singleton(pi[k]));
        }
        return total;
      });
}

// Edge-player game: a set of edges is worth the restricted game's value of
// the grand coalition on the graph keeping only those edges.
class LinkGame {
 public:
  LinkGame(CharacteristicFunction nu, const Graph& g)
      : nu_(std::move(nu)), n_(g.num_nodes()), edges_(g.edges()) {
    require(nu_.num_players() == n_, "game and graph must have the same players");
    require_size(edges_.size(), 64, "link game edge count");
  }

  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Value with edge set S_E; raw(empty) is the sum of singleton values.
  double raw(Coalition edge_set) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    edge_set.for_each([&](int e) {
      parent[root(edges_[e].u)] = root(edges_[e].v);
    });
    std::vector<Coalition> blocks(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) blocks[root(v)].insert(v);
    double total = 0.0;
    for (Coalition b : blocks) {
      if (!b.is_empty()) total += nu_(b);
    }
    return total;
  }

  // Zero-normalised game over edges (raw minus raw(empty)); Shapley values
  // are unaffected by the shift.
  CharacteristicFunction game() const {
    const double base = raw(Coalition());
    LinkGame self = *this;
    return CharacteristicFunction(
        num_edges(), [self, base](Coalition s) { return self.raw(s) - base; });
  }

 private:
  CharacteristicFunction nu_;
  int n_;
  std::vector<Edge> edges_;
};

inline LinkGame link_game(const CharacteristicFunction& nu, const Graph& g) {
  return LinkGame(nu, g);
}

// Each member counts the group members it reaches inside G[S]; itself
// only when `include_self` is set.
inline CharacteristicFunction cohesion_game(const Graph& g,
                                            bool include_self = false) {
  auto adj = std::make_shared<const std::vector<Coalition>>(out_masks(g));
  return CharacteristicFunction(g.num_nodes(), [adj, include_self](Coalition c) {
    double total = 0.0;
    c.for_each([&](int v) {
      total += reachable_within(*adj, c, v).size() - (include_self ? 0 : 1);
    });
    return total;
  });
}

// Covering game: members whose closed neighbourhood lies inside the group.
inline CharacteristicFunction covering_game(const Graph& g) {
  auto adj = std::make_shared<const std::vector<Coalition>>(out_masks(g));
  return CharacteristicFunction(g.num_nodes(), [adj](Coalition c) {
    int count = 0;
    c.for_each([&](int v) {
      if ((*adj)[v].subset_of(c)) ++count;
    });
    return static_cast<double>(count);
  });
}

// Linear-threshold activation from seed set S; the value is the number of
// active nodes at the fixed point.
inline CharacteristicFunction lt_diffusion_game(const Graph& g,
                                                std::vector<double> thresholds) {
  const int n = g.num_nodes();
  require(static_cast<int>(thresholds.size()) == n,
          "one activation threshold per node is required");
  for (double t : thresholds) require(t > 0.0, "thresholds must be positive");
  require_size(static_cast<std::size_t>(n), 64, "diffusion game");
  auto graph = std::make_shared<const Graph>(g);
  return CharacteristicFunction(
      n, [graph, n, thresholds = std::move(thresholds)](Coalition c) {
        Coalition active = c;
        bool changed = !c.is_empty();
        while (changed) {
          changed = false;
          for (NodeId v = 0; v < n; ++v) {
            if (active.contains(v)) continue;
            double w = 0.0;
            for (const Arc& a : graph->in_arcs(v)) {
              if (active.contains(a.to)) w += a.weight;
            }
            if (w >= thresholds[v] - kPathTolerance) {
              active.insert(v);
              changed = true;
            }
          }
        }
        return static_cast<double>(active.size());
      });
}

inline CharacteristicFunction weighted_voting(std::vector<double> weights,
                                              double quota) {
  double total = 0.0;
  for (double w : weights) {
    require(std::isfinite(w) && w >= 0.0, "voting weights must be >= 0");
    total += w;
  }
  require(quota > 0.0 && quota <= total, "quota must lie in (0, sum of weights]");
  return weighted_voting_game(std::move(weights), quota);
}

}  // namespace gtcent

#endif  // GTCENT_VALUE_FUNCTIONS_HPP_
