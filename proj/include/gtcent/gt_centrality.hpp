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


#ifndef GTCENT_GT_CENTRALITY_HPP_
#define GTCENT_GT_CENTRALITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/game.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/graph_algorithms.hpp"
#include "gtcent/random.hpp"
#include "gtcent/solution.hpp"
#include "gtcent/value_functions.hpp"

namespace gtcent {

// ---------------------------------------------------------------------------
// Generic composition: a group centrality paired with a solution concept.

struct ShapleyConcept {};
struct SemivalueConcept {
  SemivalueWeights beta;
};
struct BanzhafConcept {};
struct OwenConcept {
  CoalitionStructure cs;
};
struct CoalitionalConcept {
  CoalitionStructure cs;
  SemivalueWeights beta;
  std::vector<SemivalueWeights> alpha;
};
struct MonteCarloConcept {
  SamplingConcept kind = ShapleySampling{};
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};
using SolutionConcept =
    std::variant<ShapleyConcept, SemivalueConcept, BanzhafConcept, OwenConcept,
                 CoalitionalConcept, MonteCarloConcept>;

inline PayoffVector apply_concept(const CharacteristicFunction& nu,
                                  const SolutionConcept& phi) {
  return std::visit(
      [&](const auto& c) -> PayoffVector {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ShapleyConcept>) {
          return shapley_exact(nu);
        } else if constexpr (std::is_same_v<T, SemivalueConcept>) {
          return semivalue_exact(nu, c.beta);
        } else if constexpr (std::is_same_v<T, BanzhafConcept>) {
          return banzhaf(nu);
        } else if constexpr (std::is_same_v<T, OwenConcept>) {
          return owen_value(nu, c.cs);
        } else if constexpr (std::is_same_v<T, CoalitionalConcept>) {
          return coalitional_semivalue(nu, c.cs, c.beta, c.alpha);
        } else {
          return mc_estimate(nu, c.kind, c.samples, c.seed);
        }
      },
      phi);
}

using GroupCentrality = std::function<CharacteristicFunction(const Graph&)>;

// The universal slow path and oracle for every fast algorithm below.
inline CentralityResult compose(const GroupCentrality& psi,
                                const SolutionConcept& phi, const Graph& g,
                                std::string name = "composed") {
  return to_result(std::move(name), apply_concept(psi(g), phi));
}

// ---------------------------------------------------------------------------
// Myerson value by connected-subset enumeration.

inline constexpr std::uint64_t kConnectedSubsetBudget = 50'000'000;

// Each connected S with outer boundary E(S) contributes
//   +(|S|-1)! |E(S)|! / (|S|+|E(S)|)! * nu(S)  to members of S,
//   -|S)! (|E(S)|-1)! / (|S|+|E(S)|)! * nu(S)  to members of E(S).
inline PayoffVector myerson_dfs(const Graph& g, const CharacteristicFunction& nu,
                                std::uint64_t budget = kConnectedSubsetBudget) {
  const int n = g.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  std::uint64_t visited = 0;
  enumerate_connected_subsets(g, [&](Coalition s, Coalition boundary) {
    if (++visited > budget) {
      throw SizeLimitExceeded(
          "connected-subset enumeration exceeded its budget; consider Monte "
          "Carlo sampling of the restricted game",
          visited, budget);
    }
    const double value = nu(s);
    if (value == 0.0) return;
    const int k = s.size();
    const int x = boundary.size();
    const double inside = 1.0 / (k * binomial(k + x, k));
    s.for_each([&](int v) { out.values[v] += inside * value; });
    if (x > 0) {
      const double outside = 1.0 / (x * binomial(k + x, x));
      boundary.for_each([&](int v) { out.values[v] -= outside * value; });
    }
  });
  return out;
}

// Myerson value minus Shapley value of the unrestricted game.
inline CentralityResult gomez_centrality(const Graph& g,
                                         const CharacteristicFunction& nu) {
  const PayoffVector mv = myerson_dfs(g, nu);
  const PayoffVector sv = shapley_exact(nu);
  CentralityResult r;
  r.measure = "gomez";
  for (std::size_t v = 0; v < mv.size(); ++v) r.scores.push_back(mv[v] - sv[v]);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial Shapley values of the fringe and distance games.

// g1: sum over u in {v} + out(v) of 1 / (1 + indeg(u)).
inline CentralityResult sv_degree_fast(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<double> share(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    share[u] = 1.0 / (1.0 + static_cast<double>(g.in_arcs(u).size()));
  }
  CentralityResult r;
  r.measure = "sv-degree";
  r.method = Method::kClosedForm;
  r.scores.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    double s = share[v];
    for (const Arc& a : g.out_arcs(v)) s += share[a.to];
    r.scores[v] = s;
  }
  return r;
}

// g2(k): a target u with d in-neighbours is gained by u itself when fewer
// than k of them precede it, and by an in-neighbour when exactly k-1 others
// (and not u) precede it.
inline CentralityResult sv_g2_fast(const Graph& g, int k) {
  require(k >= 1, "g2 threshold k must be at least 1");
  const int n = g.num_nodes();
  std::vector<double> self(static_cast<std::size_t>(n));
  std::vector<double> via(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    const auto d = static_cast<double>(g.in_arcs(u).size());
    self[u] = std::min(static_cast<double>(k), d + 1.0) / (d + 1.0);
    via[u] = k <= d ? (d - k + 1.0) / (d * (d + 1.0)) : 0.0;
  }
  CentralityResult r;
  r.measure = "sv-g2";
  r.params["k"] = std::to_string(k);
  r.method = Method::kClosedForm;
  r.scores.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    double s = self[v];
    for (const Arc& a : g.out_arcs(v)) s += via[a.to];
    r.scores[v] = s;
  }
  return r;
}

// g4(f): for each target u, rank all nodes by distance to u (ties by id).
// A node v whose distance group ends at rank e gains f(d(v,u)) / (e + 1)
// and loses sum_{q > e} f(d_q) / (q (q + 1)).
inline CentralityResult sv_closeness_fast(const Graph& g,
                                          const DistanceFunction& f) {
  require(f.at_infinity == 0.0, "f(+inf) must be 0 for the distance game");
  const int n = g.num_nodes();
  CentralityResult r;
  r.measure = "sv-closeness";
  r.params["f"] = f.name;
  r.method = Method::kClosedForm;
  r.scores.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<NodeId> rank(static_cast<std::size_t>(n));
  std::vector<double> fval(static_cast<std::size_t>(n));
  std::vector<double> suffix(static_cast<std::size_t>(n) + 1);
  for (NodeId u = 0; u < n; ++u) {
    const std::vector<double> d = shortest_distances(g, u, /*reverse=*/true);
    std::iota(rank.begin(), rank.end(), 0);
    std::sort(rank.begin(), rank.end(), [&](NodeId a, NodeId b) {
      if (d[a] != d[b]) return d[a] < d[b];
      return a < b;
    });
    for (int q = 0; q < n; ++q) fval[q] = f(d[rank[q]]);
    suffix[n] = 0.0;
    for (int q = n - 1; q >= 1; --q) {
      suffix[q] = suffix[q + 1] + fval[q] / (static_cast<double>(q) * (q + 1));
    }
    suffix[0] = suffix[1];
    int start = 0;
    while (start < n) {
      int end = start;
      while (end + 1 < n && same_length(d[rank[end + 1]], d[rank[start]])) ++end;
      const double loss = suffix[end + 1];
      for (int q = start; q <= end; ++q) {
        r.scores[rank[q]] += fval[q] / (end + 1.0) - loss;
      }
      start = end + 1;
    }
  }
  return r;
}

// g3(d): the indicator instance of g4.
inline CentralityResult sv_cutoff_fast(const Graph& g, double cutoff) {
  CentralityResult r = sv_closeness_fast(g, DistanceFunction::indicator(cutoff));
  r.measure = "sv-cutoff";
  r.params["cutoff"] = std::to_string(cutoff);
  return r;
}

// g5: permutation sampling with incremental threshold bookkeeping, so each
// sample costs O(|V| + |E|).
inline CentralityResult sv_g5_mc(const Graph& g,
                                 const std::vector<double>& thresholds,
                                 std::uint64_t samples, std::uint64_t seed) {
  const int n = g.num_nodes();
  require(static_cast<int>(thresholds.size()) == n,
          "one influence threshold per node is required");
  for (double w : thresholds) require(w > 0.0, "thresholds must be positive");
  require(samples >= 1, "at least one sample is required");
  detail::Accumulator acc(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<double> weight(static_cast<std::size_t>(n));
  std::vector<char> counted(static_cast<std::size_t>(n));
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    Rng rng = Rng::stream(seed, b);
    const std::uint64_t len = std::min(kSampleBlock, samples - b * kSampleBlock);
    for (std::uint64_t s = 0; s < len; ++s) {
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      std::fill(weight.begin(), weight.end(), 0.0);
      std::fill(counted.begin(), counted.end(), 0);
      for (int v : order) {
        int gain = 0;
        if (!counted[v]) {
          counted[v] = 1;
          ++gain;
        }
        for (const Arc& a : g.out_arcs(v)) {
          weight[a.to] += a.weight;
          if (!counted[a.to] &&
              weight[a.to] >= thresholds[a.to] - kPathTolerance) {
            counted[a.to] = 1;
            ++gain;
          }
        }
        acc.add(v, gain);
      }
    }
  }
  CentralityResult r = to_result("sv-g5", acc.finish(samples, seed));
  return r;
}

// ---------------------------------------------------------------------------
// Betweenness-based measures.

enum class BetweennessMethod { kOracle, kClosedForm };

// Shapley value of group betweenness. The closed form evaluates the
// distance-weighted double sum literally; it is experimental and does not
// agree with the oracle in general.
inline CentralityResult sv_betweenness(
    const Graph& g, BetweennessMethod method = BetweennessMethod::kOracle) {
  if (method == BetweennessMethod::kOracle) {
    CentralityResult r = to_result("sv-betweenness", shapley_exact(group_betweenness(g)));
    r.params["method"] = "oracle";
    return r;
  }
  const ShortestPathTable t(g);
  const int n = g.num_nodes();
  CentralityResult r;
  r.measure = "sv-betweenness";
  r.params["method"] = "closed-form";
  r.method = Method::kClosedForm;
  r.warnings.push_back("experimental closed form; not certified against the "
                       "Shapley oracle");
  r.scores.assign(static_cast<std::size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double total = 0.0;
    for (NodeId s = 0; s < n; ++s) {
      if (s == v) continue;
      for (NodeId u = 0; u < n; ++u) {
        if (u == v || u == s) continue;
        const double dst = t.dist(s, u);
        if (std::isinf(dst)) continue;
        total += static_cast<double>(t.through(s, u, v)) /
                 (static_cast<double>(t.sigma(s, u)) * dst);
        const double dsv = t.dist(s, v);
        if (!std::isinf(dsv)) total += (2.0 - dsv) / (2.0 * dsv);
      }
    }
    r.scores[v] = total;
  }
  return r;
}

// Shapley value of the score game: sum over dominated u of 1/indeg(u).
inline CentralityResult beta_measure(const Graph& d) {
  require(d.directed(), "the beta measure needs a directed graph");
  CentralityResult r;
  r.measure = "beta";
  r.method = Method::kClosedForm;
  for (NodeId v = 0; v < d.num_nodes(); ++v) {
    double s = 0.0;
    for (const Arc& a : d.out_arcs(v)) {
      s += 1.0 / static_cast<double>(d.in_arcs(a.to).size());
    }
    r.scores.push_back(s);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Digraph-restricted generalised games.

struct AccessExact {};
struct AccessSemivalue {
  SemivalueWeights beta;  // over sizes {0..n-1}
};
struct AccessMonteCarlo {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};
using AccessMode = std::variant<AccessExact, AccessSemivalue, AccessMonteCarlo>;

namespace detail {

// Value of the segment-restricted game along a growing sequence.
class SegmentValue {
 public:
  SegmentValue(const CharacteristicFunction& nu,
               const std::vector<Coalition>& arcs)
      : nu_(nu), arcs_(arcs) {}

  void reset() {
    closed_ = 0.0;
    run_ = Coalition();
    last_ = -1;
  }
  double value() const { return closed_ + (run_.is_empty() ? 0.0 : nu_(run_)); }
  // Value after appending x, without changing state.
  double value_with(int x) const {
    if (last_ >= 0 && arcs_[last_].contains(x)) return closed_ + nu_(run_.with(x));
    return value() + nu_(Coalition::singleton(x));
  }
  void push(int x) {
    if (last_ >= 0 && arcs_[last_].contains(x)) {
      run_.insert(x);
    } else {
      if (!run_.is_empty()) closed_ += nu_(run_);
      run_ = Coalition::singleton(x);
    }
    last_ = x;
  }

 private:
  const CharacteristicFunction& nu_;
  const std::vector<Coalition>& arcs_;
  double closed_ = 0.0;
  Coalition run_;
  int last_ = -1;
};

}  // namespace detail

// Marginal contribution of v appended to the ordered coalition preceding
// it, averaged over orders (exact), over size-weighted ordered coalitions
// (semivalue), or over sampled orders (Monte Carlo).
inline CentralityResult accessibility(const Graph& d,
                                      const CharacteristicFunction& nu,
                                      const AccessMode& mode = AccessExact{},
                                      std::size_t bound = kOrderedBound) {
  const int n = d.num_nodes();
  require(nu.num_players() == n, "game and graph must have the same players");
  const std::vector<Coalition> arcs = out_masks(d);
  detail::SegmentValue seg(nu, arcs);
  CentralityResult r;
  r.measure = "accessibility";

  if (const auto* mc = std::get_if<AccessMonteCarlo>(&mode)) {
    require(mc->samples >= 1, "at least one sample is required");
    detail::Accumulator acc(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    const std::uint64_t blocks = (mc->samples + kSampleBlock - 1) / kSampleBlock;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      Rng rng = Rng::stream(mc->seed, b);
      const std::uint64_t len =
          std::min(kSampleBlock, mc->samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < len; ++s) {
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        seg.reset();
        double prev = 0.0;
        for (int v : order) {
          acc.add(v, seg.value_with(v) - prev);
          seg.push(v);
          prev = seg.value();
        }
      }
    }
    CentralityResult out = to_result("accessibility", acc.finish(mc->samples, mc->seed));
    out.params["mode"] = "mc";
    return out;
  }

  require_size(static_cast<std::size_t>(n), bound, "accessibility enumeration");
  r.scores.assign(static_cast<std::size_t>(n), 0.0);

  if (std::holds_alternative<AccessExact>(mode)) {
    r.params["mode"] = "exact";
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double count = 0.0;
    do {
      seg.reset();
      double prev = 0.0;
      for (int v : perm) {
        seg.push(v);
        const double cur = seg.value();
        r.scores[v] += cur - prev;
        prev = cur;
      }
      count += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (double& x : r.scores) x /= count;
    return r;
  }

  const auto& beta = std::get<AccessSemivalue>(mode).beta;
  validate_weights(beta, n);
  r.params["mode"] = "semivalue";
  for (int v = 0; v < n; ++v) {
    // Sum of marginals per prefix length, then averaged per length.
    std::vector<double> by_len(static_cast<std::size_t>(n), 0.0);
    OrderedCoalition seq;
    Coalition used = Coalition::singleton(v);
    std::function<void()> rec = [&]() {
      seg.reset();
      for (int x : seq) seg.push(x);
      by_len[seq.size()] += seg.value_with(v) - seg.value();
      if (static_cast<int>(seq.size()) == n - 1) return;
      for (int x = 0; x < n; ++x) {
        if (used.contains(x)) continue;
        seq.push_back(x);
        used.insert(x);
        rec();
        used.erase(x);
        seq.pop_back();
      }
    };
    rec();
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      if (beta[k] == 0.0) continue;
      const double sequences = binomial(n - 1, k) * factorial(k);
      total += beta[k] * by_len[k] / sequences;
    }
    r.scores[v] = total;
  }
  return r;
}

// Psi^alpha of the path-restricted game minus the Shapley value of nu.
inline CentralityResult pozo_centrality(const Graph& d,
                                        const CharacteristicFunction& nu,
                                        double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  const PayoffVector psi = psi_alpha(pozo_dividends(nu, d), alpha);
  const PayoffVector sv = shapley_exact(nu);
  CentralityResult r;
  r.measure = "pozo";
  r.params["alpha"] = std::to_string(alpha);
  for (std::size_t v = 0; v < psi.size(); ++v) r.scores.push_back(psi[v] - sv[v]);
  return r;
}

// ---------------------------------------------------------------------------
// Link-game measures.

enum class EdgeIndex { kShapley, kBanzhaf };
enum class BaseMeasure { kDegree, kCloseness, kBetweenness };

struct CohesionOptions {
  double alpha = 0.0;
  EdgeIndex index = EdgeIndex::kShapley;
  BaseMeasure base = BaseMeasure::kDegree;
  bool normalize = true;
  // Edge games larger than this fall back to permutation sampling.
  std::size_t exact_edge_bound = 20;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
};

struct CohesionResult {
  std::vector<double> edge_payoffs;  // before normalisation
  std::vector<double> edge_weights;  // blended
  CentralityResult nodes;
};

// Edge payoffs of the link game, blended with the edge weights, feed a
// weighted base measure. Blended weights act as strengths for degree and
// as lengths for closeness and betweenness.
inline CohesionResult cohesion_centrality(const Graph& g,
                                          const CharacteristicFunction& nu,
                                          const CohesionOptions& opt = {}) {
  require(opt.alpha >= 0.0 && opt.alpha <= 1.0, "alpha must lie in [0, 1]");
  const LinkGame lg(nu, g);
  const CharacteristicFunction edge_game = lg.game();
  const std::size_t m = lg.edges().size();
  PayoffVector payoff;
  if (m <= opt.exact_edge_bound) {
    payoff = opt.index == EdgeIndex::kShapley ? shapley_exact(edge_game)
                                              : banzhaf(edge_game);
  } else if (opt.index == EdgeIndex::kShapley) {
    payoff = mc_estimate(edge_game, ShapleySampling{}, opt.samples, opt.seed);
  } else {
    payoff = mc_estimate(edge_game,
                         SemivalueSampling{banzhaf_weights(static_cast<int>(m))},
                         opt.samples, opt.seed);
  }
  CohesionResult out;
  out.edge_payoffs = payoff.values;
  std::vector<double> phi = payoff.values;
  std::vector<double> omega;
  for (const Edge& e : lg.edges()) omega.push_back(e.weight);
  if (opt.normalize) {
    const double ps = std::accumulate(phi.begin(), phi.end(), 0.0);
    const double ws = std::accumulate(omega.begin(), omega.end(), 0.0);
    if (ps != 0.0) for (double& x : phi) x /= ps;
    if (ws != 0.0) for (double& x : omega) x /= ws;
  }
  std::vector<Edge> blended = lg.edges();
  for (std::size_t e = 0; e < m; ++e) {
    blended[e].weight = opt.alpha * omega[e] + (1.0 - opt.alpha) * phi[e];
    out.edge_weights.push_back(blended[e].weight);
  }
  CentralityResult& r = out.nodes;
  if (opt.base == BaseMeasure::kDegree) {
    r.measure = "cohesion";
    r.scores.assign(static_cast<std::size_t>(g.num_nodes()), 0.0);
    for (const Edge& e : blended) {
      r.scores[e.u] += e.weight;
      r.scores[e.v] += e.weight;
    }
  } else {
    for (const Edge& e : blended) {
      require(e.weight > 0.0, "blended edge lengths must be positive for "
                              "closeness or betweenness");
    }
    const Graph reweighted(g.num_nodes(), blended, g.directed(), g.labels());
    r = opt.base == BaseMeasure::kCloseness ? closeness(reweighted)
                                            : betweenness(reweighted);
    r.measure = "cohesion";
  }
  r.params["alpha"] = std::to_string(opt.alpha);
  r.method = payoff.method;
  return out;
}

// ---------------------------------------------------------------------------
// Path-swing (Grofman-Owen) centrality.

struct GrofmanOwenResult {
  std::vector<std::uint64_t> swings;
  std::uint64_t total_swings = 0;
  std::uint64_t paths = 0;
  CentralityResult relative;     // swings / total swings
  std::vector<double> normalized;  // swings / 2^(n-1)
};

// Every simple path is a winning coalition; a visited node swings when the
// remaining visited nodes admit no path between the same endpoints.
inline GrofmanOwenResult grofman_owen(const Graph& d,
                                      bool count_endpoint_swings = false,
                                      std::uint64_t budget = 50'000'000) {
  const int n = d.num_nodes();
  const std::vector<Coalition> arcs = out_masks(d);
  GrofmanOwenResult out;
  out.swings.assign(static_cast<std::size_t>(n), 0);
  enumerate_simple_paths(d, [&](const std::vector<NodeId>& path) {
    if (++out.paths > budget) {
      throw SizeLimitExceeded("simple-path enumeration exceeded its budget",
                              out.paths, budget);
    }
    const Coalition members = to_coalition(path);
    const NodeId s = path.front();
    const NodeId t = path.back();
    for (std::size_t k = 0; k < path.size(); ++k) {
      const bool endpoint = k == 0 || k + 1 == path.size();
      if (endpoint) {
        if (count_endpoint_swings) ++out.swings[path[k]];
        continue;
      }
      const Coalition rest = members.without(path[k]);
      if (!reachable_within(arcs, rest, s).contains(t)) ++out.swings[path[k]];
    }
  });
  for (auto x : out.swings) out.total_swings += x;
  out.relative.measure = "grofman-owen";
  const double denom = std::ldexp(1.0, n - 1);
  for (NodeId v = 0; v < n; ++v) {
    const auto sw = static_cast<double>(out.swings[v]);
    out.relative.scores.push_back(
        out.total_swings > 0 ? sw / static_cast<double>(out.total_swings) : 0.0);
    out.normalized.push_back(sw / denom);
  }
  if (out.total_swings == 0) {
    out.relative.warnings.push_back("no swings: relative index undefined, "
                                    "reported as zeros");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity-game measures.

inline CentralityResult kt_allocation(const Graph& d,
                                      const CharacteristicFunction& nu) {
  return to_result("kt", shapley_exact(kt_restriction(nu, d)));
}

// Myerson value of nu(C) = 2(|C| - 1), which restricts to the attachment
// game.
inline CentralityResult attachment_centrality(const Graph& g) {
  const auto nu = symmetric_game(g.num_nodes(), [](int k) {
    return k == 0 ? 0.0 : 2.0 * (k - 1);
  });
  return to_result("attachment", myerson_dfs(g, nu));
}

// Direct Shapley value of the attachment game (2^n evaluations).
inline CentralityResult attachment_direct(const Graph& g) {
  return to_result("attachment", shapley_exact(attachment_game(g)));
}

inline CentralityResult connectivity_centrality(
    const Graph& g, std::function<double(Coalition)> f,
    const SolutionConcept& phi = ShapleyConcept{}) {
  return to_result("connectivity", apply_concept(connectivity_game(g, std::move(f)), phi));
}

// ---------------------------------------------------------------------------
// Resource-control (VL) measure.

struct VlControlResult {
  std::vector<double> x;
  double objective = 0.0;       // sum_v log y_v
  double kkt_residual = 0.0;
  double proper_residual = 0.0;  // max_i |SV^x_i - x_i| on the scaled covering game
  long iterations = 0;
  CentralityResult result;
};

// Maximises sum_v log y_v with y_v = x_v + sum_{u in out(v)} x_u over the
// simplex by multiplicative ascent x_i <- x_i g_i / n, where
// g_i = d/dx_i sum_v log y_v. Fixed points with g_i <= n off the support are
// exactly the KKT points of this concave problem.
inline VlControlResult vl_control(const Graph& g, double tolerance = 1e-10,
                                  long max_iters = 1'000'000) {
  const int n = g.num_nodes();
  require(n > 0, "resource control is infeasible on an empty graph");
  const double nd = n;
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / nd);
  std::vector<double> y(static_cast<std::size_t>(n));
  std::vector<double> grad(static_cast<std::size_t>(n));
  auto evaluate = [&]() {
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (const Arc& a : g.out_arcs(v)) s += x[a.to];
      if (!(s > 0.0)) throw NumericalFailure("resource control: y_v vanished");
      y[v] = s;
    }
    for (NodeId i = 0; i < n; ++i) {
      double s = 1.0 / y[i];
      for (const Arc& a : g.in_arcs(i)) s += 1.0 / y[a.to];
      grad[i] = s;
    }
    double res = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      res = std::max(res, std::abs(x[i] * (grad[i] - nd)) / nd);
      res = std::max(res, std::max(0.0, grad[i] - nd) / nd);
    }
    return res;
  };
  VlControlResult out;
  double res = evaluate();
  long it = 0;
  while (res > tolerance) {
    if (it >= max_iters) {
      throw NumericalFailure("resource control did not converge (KKT residual " +
                             std::to_string(res) + ")");
    }
    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      x[i] *= grad[i] / nd;
      total += x[i];
    }
    for (double& e : x) e /= total;
    res = evaluate();
    ++it;
  }
  out.iterations = it;
  out.kkt_residual = res;
  for (double e : y) out.objective += std::log(e);
  // Covering game scaled by 1/n has dividend 1/n on every closed
  // neighbourhood, so SV^x_i = x_i g_i / n.
  for (NodeId i = 0; i < n; ++i) {
    out.proper_residual =
        std::max(out.proper_residual, std::abs(x[i] * grad[i] / nd - x[i]));
  }
  out.x = x;
  out.result.measure = "vl-control";
  out.result.scores = x;
  out.result.params["iterations"] = std::to_string(it);
  return out;
}

// ---------------------------------------------------------------------------
// Community-aware degree (Owen value / coalitional semivalue of group
// degree) in closed form.

namespace detail {

// Probability that no member of `blocked` precedes player v under the
// two-level coalition distribution.
inline double untouched_probability(const CoalitionStructure& cs, int q,
                                    Coalition blocked,
                                    const SemivalueWeights& beta,
                                    const SemivalueWeights& alpha) {
  const int m = static_cast<int>(cs.communities.size());
  const Coalition mine = cs.communities[q];
  const int inside = (blocked & mine).size();
  int touched = 0;
  for (int r = 0; r < m; ++r) {
    if (r != q && cs.communities[r].intersects(blocked)) ++touched;
  }
  double outer = 0.0;
  for (int t = 0; t < m; ++t) {
    if (beta[t] != 0.0) {
      outer += beta[t] * binomial(m - 1 - touched, t) / binomial(m - 1, t);
    }
  }
  const int qs = mine.size();
  double inner = 0.0;
  for (int l = 0; l < qs; ++l) {
    if (alpha[l] != 0.0) {
      inner += alpha[l] * binomial(qs - 1 - inside, l) / binomial(qs - 1, l);
    }
  }
  return outer * inner;
}

}  // namespace detail

// Coalitional semivalue of group degree. A player loses itself from the
// count when an in-neighbour precedes it and gains each out-neighbour u
// none of whose other covering nodes precede it.
inline PayoffVector owen_degree_exact(const Graph& g,
                                      const CoalitionStructure& cs,
                                      const SemivalueWeights& beta,
                                      const std::vector<SemivalueWeights>& alpha) {
  const int n = g.num_nodes();
  require(!cs.overlapping, "community degree needs a partition");
  cs.validate(n);
  const int m = static_cast<int>(cs.communities.size());
  validate_weights(beta, m, "community weights");
  require(alpha.size() == cs.communities.size(),
          "one intra-community weight vector per community is required");
  for (int q = 0; q < m; ++q) {
    validate_weights(alpha[q], cs.communities[q].size(), "intra-community weights");
  }
  const auto in = in_masks(g);
  PayoffVector out;
  out.method = Method::kClosedForm;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const int q = cs.index_of(v);
    double s = -1.0 + detail::untouched_probability(cs, q, in[v], beta, alpha[q]);
    for (const Arc& a : g.out_arcs(v)) {
      const Coalition cover = in[a.to].with(a.to).without(v);
      s += detail::untouched_probability(cs, q, cover, beta, alpha[q]);
    }
    out.values[v] = s;
  }
  return out;
}

enum class OwenDegreeMode { kExact, kMonteCarlo };

inline CentralityResult owen_degree(const Graph& g, const CoalitionStructure& cs,
                                    OwenDegreeMode mode = OwenDegreeMode::kExact,
                                    std::uint64_t samples = 10000,
                                    std::uint64_t seed = 1) {
  if (mode == OwenDegreeMode::kMonteCarlo) {
    return to_result("owen-degree",
                     mc_estimate(group_degree(g), OwenSampling{cs}, samples, seed));
  }
  std::vector<SemivalueWeights> alpha;
  for (Coalition q : cs.communities) alpha.push_back(shapley_weights(q.size()));
  const int m = static_cast<int>(cs.communities.size());
  return to_result("owen-degree",
                   owen_degree_exact(g, cs, shapley_weights(m), alpha));
}

}  // namespace gtcent

#endif  // GTCENT_GT_CENTRALITY_HPP_
