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


#ifndef GTCENT_CENTRALITY_HPP_
#define GTCENT_CENTRALITY_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtcent/errors.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/graph_algorithms.hpp"
#include "gtcent/solution.hpp"

namespace gtcent {

// Per-node scores plus the metadata needed to reproduce them.
struct CentralityResult {
  std::string measure;
  std::map<std::string, std::string> params;
  std::vector<double> scores;
  std::vector<double> std_errors;  // Monte Carlo only
  bool higher_is_better = true;
  Method method = Method::kExact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;

  double operator[](std::size_t v) const { return scores[v]; }
  std::size_t size() const { return scores.size(); }
};

inline CentralityResult to_result(std::string measure, PayoffVector p) {
  CentralityResult r;
  r.measure = std::move(measure);
  r.scores = std::move(p.values);
  r.std_errors = std::move(p.std_errors);
  r.method = p.method;
  r.samples = p.samples;
  r.seed = p.seed;
  return r;
}

// Counting convention for source/target pairs.
enum class PairMode { kOrdered, kUnordered };

// A distance-decay function f with explicit values at 0 and at +infinity.
struct DistanceFunction {
  std::string name;
  std::function<double(double)> f;  // called for finite d > 0
  double at_zero = 0.0;
  double at_infinity = 0.0;

  double operator()(double d) const {
    if (std::isinf(d)) return at_infinity;
    if (d == 0.0) return at_zero;
    return f(d);
  }

  // f(d) = 1/d; the member term f(0) is taken as 0.
  static DistanceFunction harmonic() {
    return {"harmonic", [](double d) { return 1.0 / d; }, 0.0, 0.0};
  }
  // f(d) = 1 when d <= cutoff.
  static DistanceFunction indicator(double cutoff) {
    require(cutoff >= 0.0, "cutoff distance must be non-negative");
    return {"indicator",
            [cutoff](double d) {
              return d <= cutoff + kPathTolerance ? 1.0 : 0.0;
            },
            1.0, 0.0};
  }
  static DistanceFunction constant() {
    return {"const", [](double) { return 1.0; }, 1.0, 0.0};
  }
  // f(d) = exp(-lambda d).
  static DistanceFunction exponential(double lambda) {
    require(lambda >= 0.0, "decay rate must be non-negative");
    return {"exp", [lambda](double d) { return std::exp(-lambda * d); }, 1.0,
            0.0};
  }
  // f(d) = d^-p for d > 0, f(0) = 0.
  static DistanceFunction inverse_power(double p) {
    require(p > 0.0, "exponent must be positive");
    return {"pow", [p](double d) { return std::pow(d, -p); }, 0.0, 0.0};
  }
};

inline CentralityResult degree(const Graph& g) {
  CentralityResult r;
  r.measure = "degree";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    r.scores.push_back(static_cast<double>(g.out_arcs(v).size()));
  }
  return r;
}

// Sum of incident edge weights.
inline CentralityResult weighted_degree(const Graph& g) {
  CentralityResult r;
  r.measure = "weighted-degree";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double s = 0.0;
    for (const Arc& a : g.out_arcs(v)) s += a.weight;
    r.scores.push_back(s);
  }
  return r;
}

inline CentralityResult betweenness(const Graph& g,
                                    PairMode mode = PairMode::kOrdered) {
  const int n = g.num_nodes();
  CentralityResult r;
  r.measure = "betweenness";
  r.scores.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> delta(static_cast<std::size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    const ShortestPathTree t = shortest_path_tree(g, s);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : t.preds[w]) {
        delta[v] += static_cast<double>(t.sigma[v]) /
                    static_cast<double>(t.sigma[w]) * (1.0 + delta[w]);
      }
      if (w != s) r.scores[w] += delta[w];
    }
  }
  if (mode == PairMode::kUnordered) {
    for (double& x : r.scores) x /= 2.0;
  }
  return r;
}

// Raw shortest-path counts through each node. With endpoints included,
// paths starting or ending at v count as well, including the trivial
// path (v).
inline CentralityResult stress(const Graph& g, bool include_endpoints = false,
                               PairMode mode = PairMode::kOrdered) {
  const int n = g.num_nodes();
  CentralityResult r;
  r.measure = include_endpoints ? "stress-inclusive" : "stress";
  r.scores.assign(static_cast<std::size_t>(n), 0.0);
  // onward[v]: shortest-path continuations from v to later targets.
  std::vector<double> onward(static_cast<std::size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    const ShortestPathTree t = shortest_path_tree(g, s);
    std::fill(onward.begin(), onward.end(), 0.0);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : t.preds[w]) onward[v] += 1.0 + onward[w];
      if (w != s) r.scores[w] += static_cast<double>(t.sigma[w]) * onward[w];
    }
    if (include_endpoints) {
      r.scores[s] += 1.0;  // trivial path s = t
      for (NodeId w : t.order) {
        if (w == s) continue;
        const auto paths = static_cast<double>(t.sigma[w]);
        r.scores[s] += paths;  // s as source
        r.scores[w] += paths;  // w as target
      }
    }
  }
  if (mode == PairMode::kUnordered) {
    for (double& x : r.scores) x /= 2.0;
  }
  return r;
}

// Sum of distances to every other node; lower means more central.
inline CentralityResult closeness(const Graph& g) {
  CentralityResult r;
  r.measure = "closeness";
  r.higher_is_better = false;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto d = shortest_distances(g, v);
    double total = 0.0;
    for (double x : d) {
      if (std::isinf(x)) {
        throw InvalidInput("closeness requires every node to be reachable "
                           "(node '" + g.label(v) + "' cannot reach all)");
      }
      total += x;
    }
    r.scores.push_back(total);
  }
  return r;
}

inline CentralityResult generalized_closeness(const Graph& g,
                                              const DistanceFunction& f) {
  CentralityResult r;
  r.measure = "generalized-closeness";
  r.params["f"] = f.name;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto d = shortest_distances(g, v);
    double total = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (u != v) total += f(d[u]);
    }
    r.scores.push_back(total);
  }
  return r;
}

// Principal eigenvector of the (weighted) adjacency matrix by power
// iteration on A + I, which shares its eigenvectors and avoids the
// oscillation of bipartite graphs. L2-normalised, non-negative.
inline CentralityResult eigenvector(const Graph& g, double tolerance = 1e-10,
                                    long max_iters = 100000) {
  require(!g.directed(), "eigenvector centrality needs an undirected graph");
  require(g.num_edges() > 0, "eigenvector centrality needs at least one edge");
  const int n = g.num_nodes();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(n));
  std::vector<double> y(static_cast<std::size_t>(n));
  for (long it = 0; it < max_iters; ++it) {
    // y = (A + I) x, so A x = y - x and the Rayleigh quotient is x.(y - x).
    double lambda = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (const Arc& a : g.out_arcs(v)) s += a.weight * x[a.to];
      y[v] = s;
      lambda += x[v] * (s - x[v]);
    }
    double residual = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      residual = std::max(residual, std::abs(y[v] - x[v] - lambda * x[v]));
    }
    if (residual <= tolerance) {
      CentralityResult r;
      r.measure = "eigenvector";
      r.scores = x;
      r.params["iterations"] = std::to_string(it);
      return r;
    }
    double norm = 0.0;
    for (double e : y) norm += e * e;
    norm = std::sqrt(norm);
    for (NodeId v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  std::string iterate;
  for (double e : x) iterate += std::to_string(e) + " ";
  throw NumericalFailure("eigenvector power iteration did not converge in " +
                         std::to_string(max_iters) +
                         " iterations; last iterate: " + iterate);
}

}  // namespace gtcent

#endif  // GTCENT_CENTRALITY_HPP_
