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


#ifndef GTCENT_CLI_HPP_
#define GTCENT_CLI_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtcent/centrality.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/generators.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/gt_centrality.hpp"
#include "gtcent/io.hpp"
#include "gtcent/solution.hpp"
#include "gtcent/value_functions.hpp"

namespace gtcent {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSize = 3;
inline constexpr int kExitNumerical = 4;

// Parsed `compute` flags. `given` records which optional flags appeared.
struct ComputeArgs {
  std::string measure;
  std::string graph;
  bool directed = false;
  std::string beta = "shapley";
  double alpha = 0.0;
  int k = 1;
  double cutoff = 1.0;
  std::string f = "harmonic";
  std::string communities;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
  std::string game;
  double threshold = 1.0;
  std::string format = "json";
  std::string out;
  std::set<std::string> given;

  bool has(const std::string& flag) const { return given.count(flag) > 0; }
};

// ---------------------------------------------------------------------------
// Flag value parsers.

inline double parse_number(const std::string& s, const std::string& what) {
  auto v = detail::parse_double(s);
  if (!v) throw InvalidInput("bad " + what + " '" + s + "'");
  return *v;
}

// shapley | banzhaf | point:K | FILE with n whitespace-separated weights
// for coalition sizes 0..n-1.
inline SemivalueWeights parse_beta(const std::string& text, int n) {
  if (text == "shapley") return shapley_weights(n);
  if (text == "banzhaf") return banzhaf_weights(n);
  if (text.rfind("point:", 0) == 0) {
    const double k = parse_number(text.substr(6), "point size");
    require(k >= 0 && k < n && k == std::floor(k), "point size out of range");
    return point_weights(n, static_cast<int>(k));
  }
  std::istringstream in(read_file(text));
  SemivalueWeights w;
  for (std::string tok; in >> tok;) w.push_back(parse_number(tok, "weight"));
  validate_weights(w, n, "--beta file");
  return w;
}

// harmonic | indicator | const | exp:LAMBDA | pow:P
inline DistanceFunction parse_distance_function(const std::string& text,
                                                double cutoff) {
  if (text == "harmonic") return DistanceFunction::harmonic();
  if (text == "indicator") return DistanceFunction::indicator(cutoff);
  if (text == "const") return DistanceFunction::constant();
  if (text.rfind("exp:", 0) == 0) {
    return DistanceFunction::exponential(parse_number(text.substr(4), "decay rate"));
  }
  if (text.rfind("pow:", 0) == 0) {
    return DistanceFunction::inverse_power(parse_number(text.substr(4), "exponent"));
  }
  throw InvalidInput("unknown distance function '" + text + "'");
}

// Built-in coalition worths: square |C|^2, pow:K |C|^K, count |C|, unit 1.
inline std::function<double(int)> parse_size_function(const std::string& text) {
  if (text == "square") return [](int s) { return static_cast<double>(s) * s; };
  if (text == "count") return [](int s) { return static_cast<double>(s); };
  if (text == "unit") return [](int) { return 1.0; };
  if (text.rfind("pow:", 0) == 0) {
    const double k = parse_number(text.substr(4), "game exponent");
    require(k > 0.0, "game exponent must be positive");
    return [k](int s) { return std::pow(static_cast<double>(s), k); };
  }
  throw InvalidInput("unknown game '" + text + "'");
}

inline CharacteristicFunction parse_game(const std::string& text, int n) {
  auto f = parse_size_function(text);
  return symmetric_game(n, [f](int s) { return s == 0 ? 0.0 : f(s); });
}

inline CoalitionStructure load_communities(const std::string& path, const Graph& g) {
  CoalitionStructure cs = parse_communities(read_file(path), g);
  cs.validate(g.num_nodes());
  return cs;
}

// ---------------------------------------------------------------------------
// Measure catalog.

struct MeasureSpec {
  std::string name;
  std::string summary;
  std::set<std::string> flags;  // accepted optional flags
  std::function<CentralityResult(const Graph&, const ComputeArgs&)> run;
};

namespace detail {

inline CentralityResult with_game_concept(const CharacteristicFunction& nu,
                                          const Graph& g, const ComputeArgs& a,
                                          const std::string& name) {
  const int n = g.num_nodes();
  if (a.has("communities")) {
    const CoalitionStructure cs = load_communities(a.communities, g);
    if (cs.overlapping) {
      require(!a.has("mc-samples"), "overlapping communities have no sampler");
      return to_result(name, configuration_value(nu, cs));
    }
    if (a.has("mc-samples")) {
      return to_result(name, mc_estimate(nu, OwenSampling{cs}, a.mc_samples, a.seed));
    }
    if (a.has("beta")) {
      std::vector<SemivalueWeights> alpha;
      for (Coalition q : cs.communities) alpha.push_back(shapley_weights(q.size()));
      return to_result(name, coalitional_semivalue(
                                 nu, cs, parse_beta(a.beta, static_cast<int>(cs.communities.size())),
                                 alpha));
    }
    return to_result(name, owen_value(nu, cs));
  }
  const SemivalueWeights beta = parse_beta(a.beta, n);
  if (a.has("mc-samples")) {
    if (a.beta == "shapley") {
      return to_result(name, mc_estimate(nu, ShapleySampling{}, a.mc_samples, a.seed));
    }
    return to_result(name, mc_estimate(nu, SemivalueSampling{beta}, a.mc_samples, a.seed));
  }
  if (a.beta == "shapley") return to_result(name, shapley_exact(nu));
  return to_result(name, semivalue_exact(nu, beta));
}

inline std::vector<double> uniform_thresholds(const Graph& g, double w) {
  return std::vector<double>(static_cast<std::size_t>(g.num_nodes()), w);
}

// Component efficiency: the payoffs in each component add up to its worth.
inline void check_component_efficiency(const Graph& g, const CharacteristicFunction& nu,
                                       const CentralityResult& r) {
  for (Coalition k : components(g, Coalition::full(g.num_nodes()))) {
    double sum = 0.0;
    k.for_each([&](int v) { sum += r.scores[v]; });
    const double worth = nu(k);
    if (std::abs(sum - worth) > 1e-9 * std::max(1.0, std::abs(worth))) {
      throw NumericalFailure("component efficiency violated");
    }
  }
}

}  // namespace detail

inline const std::vector<MeasureSpec>& measure_catalog() {
  using A = ComputeArgs;
  static const std::vector<MeasureSpec> catalog = {
      {"degree", "number of neighbours", {}, [](const Graph& g, const A&) { return degree(g); }},
      {"weighted-degree", "sum of incident edge weights", {},
       [](const Graph& g, const A&) { return weighted_degree(g); }},
      {"betweenness", "shortest-path betweenness over ordered pairs", {},
       [](const Graph& g, const A&) { return betweenness(g); }},
      {"stress", "number of shortest paths through a node", {},
       [](const Graph& g, const A&) { return stress(g); }},
      {"stress-inclusive", "stress counting paths that start or end at the node", {},
       [](const Graph& g, const A&) { return stress(g, true); }},
      {"closeness", "sum of distances to all other nodes (lower is central)", {},
       [](const Graph& g, const A&) { return closeness(g); }},
      {"generalized-closeness", "sum of f(distance) to all other nodes", {"f", "cutoff"},
       [](const Graph& g, const A& a) {
         return generalized_closeness(g, parse_distance_function(a.f, a.cutoff));
       }},
      {"eigenvector", "principal eigenvector of the adjacency matrix", {},
       [](const Graph& g, const A&) { return eigenvector(g); }},
      {"composite-degree", "group degree with a solution concept",
       {"beta", "communities", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         return detail::with_game_concept(group_degree(g), g, a, "composite-degree");
       }},
      {"composite-betweenness", "group betweenness with a solution concept",
       {"beta", "communities", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         return detail::with_game_concept(group_betweenness(g), g, a,
                                          "composite-betweenness");
       }},
      {"composite-closeness", "group closeness with f, with a solution concept",
       {"beta", "communities", "mc-samples", "seed", "f", "cutoff"},
       [](const Graph& g, const A& a) {
         return detail::with_game_concept(
             group_closeness_general(g, parse_distance_function(a.f, a.cutoff)), g, a,
             "composite-closeness");
       }},
      {"composite-stress", "group stress with a solution concept",
       {"beta", "communities", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         return detail::with_game_concept(group_stress(g), g, a, "composite-stress");
       }},
      {"composite-stress-inclusive", "endpoint-inclusive group stress with a solution concept",
       {"beta", "communities", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         return detail::with_game_concept(group_stress(g, true), g, a,
                                          "composite-stress-inclusive");
       }},
      {"sv-degree", "Shapley value of the fringe game g1, linear time", {},
       [](const Graph& g, const A&) { return sv_degree_fast(g); }},
      {"sv-g2", "Shapley value of the k-fringe game g2", {"k"},
       [](const Graph& g, const A& a) { return sv_g2_fast(g, a.k); }},
      {"sv-cutoff", "Shapley value of the cutoff-distance game g3", {"cutoff"},
       [](const Graph& g, const A& a) { return sv_cutoff_fast(g, a.cutoff); }},
      {"sv-closeness", "Shapley value of the distance game g4", {"f", "cutoff"},
       [](const Graph& g, const A& a) {
         return sv_closeness_fast(g, parse_distance_function(a.f, a.cutoff));
       }},
      {"sv-g5", "sampled Shapley value of the influence-threshold game g5",
       {"threshold", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         return sv_g5_mc(g, detail::uniform_thresholds(g, a.threshold),
                         a.has("mc-samples") ? a.mc_samples : 10000, a.seed);
       }},
      {"sv-betweenness", "Shapley value of group betweenness (exact)", {},
       [](const Graph& g, const A&) { return sv_betweenness(g); }},
      {"sv-betweenness-closed", "experimental closed form for Shapley betweenness", {},
       [](const Graph& g, const A&) {
         return sv_betweenness(g, BetweennessMethod::kClosedForm);
       }},
      {"beta-measure", "sum over out-neighbours of 1/indegree (digraphs)", {},
       [](const Graph& g, const A&) { return beta_measure(g); }},
      {"lt-diffusion", "Shapley value of the linear-threshold diffusion game",
       {"threshold", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         const auto nu = lt_diffusion_game(g, detail::uniform_thresholds(g, a.threshold));
         if (a.has("mc-samples")) {
           return to_result("lt-diffusion",
                            mc_estimate(nu, ShapleySampling{}, a.mc_samples, a.seed));
         }
         return to_result("lt-diffusion", shapley_exact(nu));
       }},
      {"myerson", "Myerson value of a built-in game restricted to the graph", {"game"},
       [](const Graph& g, const A& a) {
         const auto nu = parse_game(a.game.empty() ? "square" : a.game, g.num_nodes());
         CentralityResult r = to_result("myerson", myerson_dfs(g, nu));
         detail::check_component_efficiency(g, nu, r);
         return r;
       }},
      {"gomez", "Myerson value minus Shapley value of a built-in game", {"game"},
       [](const Graph& g, const A& a) {
         return gomez_centrality(
             g, parse_game(a.game.empty() ? "square" : a.game, g.num_nodes()));
       }},
      {"kt", "Shapley value of the weak-connectivity restricted game", {"game"},
       [](const Graph& g, const A& a) {
         return kt_allocation(g, parse_game(a.game.empty() ? "square" : a.game,
                                            g.num_nodes()));
       }},
      {"pozo", "path-restricted Psi-alpha value minus Shapley value", {"game", "alpha"},
       [](const Graph& g, const A& a) {
         return pozo_centrality(
             g, parse_game(a.game.empty() ? "square" : a.game, g.num_nodes()), a.alpha);
       }},
      {"accessibility", "marginal value of joining ordered coalitions along arcs",
       {"game", "beta", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         const auto nu = parse_game(a.game.empty() ? "square" : a.game, g.num_nodes());
         AccessMode mode = AccessExact{};
         if (a.has("mc-samples")) {
           mode = AccessMonteCarlo{a.mc_samples, a.seed};
         } else if (a.has("beta")) {
           mode = AccessSemivalue{parse_beta(a.beta, g.num_nodes())};
         }
         return accessibility(g, nu, mode);
       }},
      {"attachment", "Myerson value of 2(|C|-1): the attachment game", {},
       [](const Graph& g, const A&) { return attachment_centrality(g); }},
      {"connectivity", "Shapley value of a game paying on connected coalitions",
       {"game", "beta"},
       [](const Graph& g, const A& a) {
         auto f = parse_size_function(a.game.empty() ? "unit" : a.game);
         SolutionConcept phi = ShapleyConcept{};
         if (a.has("beta")) phi = SemivalueConcept{parse_beta(a.beta, g.num_nodes())};
         return connectivity_centrality(
             g, [f](Coalition c) { return f(c.size()); }, phi);
       }},
      {"grofman-owen", "share of path swings over all simple paths", {},
       [](const Graph& g, const A&) { return grofman_owen(g).relative; }},
      {"cohesion", "edge Shapley/Banzhaf of the cohesion link game, blended into degree",
       {"alpha", "beta", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         CohesionOptions opt;
         opt.alpha = a.alpha;
         require(a.beta == "shapley" || a.beta == "banzhaf",
                 "cohesion accepts --beta shapley or banzhaf");
         opt.index = a.beta == "banzhaf" ? EdgeIndex::kBanzhaf : EdgeIndex::kShapley;
         if (a.has("mc-samples")) {
           opt.exact_edge_bound = 0;
           opt.samples = a.mc_samples;
         }
         opt.seed = a.seed;
         return cohesion_centrality(g, cohesion_game(g), opt).nodes;
       }},
      {"vl-control", "resource-control weights maximising sum of log coverage", {},
       [](const Graph& g, const A&) { return vl_control(g).result; }},
      {"owen-degree", "Owen value of group degree under communities",
       {"communities", "mc-samples", "seed"},
       [](const Graph& g, const A& a) {
         require(a.has("communities"), "owen-degree requires --communities");
         const CoalitionStructure cs = load_communities(a.communities, g);
         require(!cs.overlapping, "owen-degree needs a partition");
         if (a.has("mc-samples")) {
           return owen_degree(g, cs, OwenDegreeMode::kMonteCarlo, a.mc_samples, a.seed);
         }
         return owen_degree(g, cs);
       }},
      {"configuration-degree", "configuration value of group degree under a cover",
       {"communities"},
       [](const Graph& g, const A& a) {
         require(a.has("communities"), "configuration-degree requires --communities");
         return to_result("configuration-degree",
                          configuration_value(group_degree(g),
                                              load_communities(a.communities, g)));
       }},
  };
  return catalog;
}

inline const MeasureSpec& find_measure(const std::string& name) {
  for (const auto& m : measure_catalog()) {
    if (m.name == name) return m;
  }
  throw InvalidInput("unknown measure '" + name + "' (see `gtcent list`)");
}

// ---------------------------------------------------------------------------
// compute

inline ResultDocument compute(const ComputeArgs& a, double* runtime_ms = nullptr) {
  const MeasureSpec& text = find_measure(a.measure);
  for (const auto& flag : a.given) {
    if (flag == "seed" && text.flags.count("mc-samples")) continue;
    if (!text.flags.count(flag)) {
      throw InvalidInput("--" + flag + " does not apply to measure '" + a.measure + "'");
    }
  }
  if (a.has("seed")) require(a.has("mc-samples") || a.measure == "sv-g5",
                             "--seed requires --mc-samples");
  const Graph g = load_graph(a.graph, a.directed);
  const auto start = std::chrono::steady_clock::now();
  CentralityResult r = text.run(g, a);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  if (runtime_ms) *runtime_ms = ms;
  r.measure = a.measure;
  const std::map<std::string, std::string> values = {
      {"beta", a.beta},   {"alpha", format_number(a.alpha)},
      {"k", std::to_string(a.k)}, {"cutoff", format_number(a.cutoff)},
      {"f", a.f},         {"communities", a.communities},
      {"game", a.game},   {"threshold", format_number(a.threshold)}};
  for (const auto& [flag, value] : values) {
    if (a.has(flag)) r.params[flag] = value;
  }
  return make_document(g, r, ms);
}

// ---------------------------------------------------------------------------
// compare: fast path against the composition oracle.

struct Comparison {
  std::string measure;
  std::string fast;
  std::string oracle;
  double max_abs_diff = 0.0;
  int n = 0;
  std::size_t m = 0;
};

inline constexpr double kCompareTolerance = 1e-9;

inline Comparison compare_with_oracle(const Graph& g, const ComputeArgs& a) {
  Comparison c;
  c.measure = a.measure;
  c.n = g.num_nodes();
  c.m = g.num_edges();
  const int n = g.num_nodes();
  CentralityResult fast;
  CentralityResult oracle;
  const auto game_or = [&](const char* fallback) {
    return parse_game(a.game.empty() ? fallback : a.game, n);
  };
  if (a.measure == "sv-degree") {
    fast = sv_degree_fast(g);
    oracle = compose([](const Graph& h) { return fringe_game(h); }, ShapleyConcept{}, g);
  } else if (a.measure == "sv-g2") {
    fast = sv_g2_fast(g, a.k);
    oracle = compose([&](const Graph& h) { return threshold_fringe_game(h, a.k); },
                     ShapleyConcept{}, g);
  } else if (a.measure == "sv-cutoff") {
    fast = sv_cutoff_fast(g, a.cutoff);
    oracle = compose([&](const Graph& h) { return cutoff_game(h, a.cutoff); },
                     ShapleyConcept{}, g);
  } else if (a.measure == "sv-closeness") {
    const DistanceFunction f = parse_distance_function(a.f, a.cutoff);
    fast = sv_closeness_fast(g, f);
    oracle = compose([&](const Graph& h) { return distance_game(h, f); },
                     ShapleyConcept{}, g);
  } else if (a.measure == "beta-measure") {
    fast = beta_measure(g);
    oracle = compose([](const Graph& h) { return score_game(h); }, ShapleyConcept{}, g);
  } else if (a.measure == "myerson") {
    const auto nu = game_or("square");
    fast = to_result("myerson", myerson_dfs(g, nu));
    oracle = to_result("myerson", shapley_exact(myerson_restriction(nu, g)));
  } else if (a.measure == "attachment") {
    fast = attachment_centrality(g);
    oracle = attachment_direct(g);
  } else if (a.measure == "kt") {
    require(!g.directed(), "kt is compared with Myerson on undirected graphs");
    const auto nu = game_or("square");
    fast = kt_allocation(g, nu);
    oracle = to_result("myerson", shapley_exact(myerson_restriction(nu, g)));
  } else if (a.measure == "owen-degree") {
    require(a.has("communities"), "owen-degree requires --communities");
    const CoalitionStructure cs = load_communities(a.communities, g);
    fast = owen_degree(g, cs);
    oracle = compose([](const Graph& h) { return group_degree(h); }, OwenConcept{cs}, g);
  } else if (a.measure == "sv-betweenness-closed") {
    fast = sv_betweenness(g, BetweennessMethod::kClosedForm);
    oracle = compose([](const Graph& h) { return group_betweenness(h); },
                     ShapleyConcept{}, g);
  } else {
    throw InvalidInput("measure '" + a.measure + "' has no fast path to compare");
  }
  c.fast = method_name(fast.method);
  c.oracle = method_name(oracle.method);
  for (int v = 0; v < n; ++v) {
    c.max_abs_diff = std::max(c.max_abs_diff, std::abs(fast[v] - oracle[v]));
  }
  return c;
}

// ---------------------------------------------------------------------------
// bench: desk-scale timing of the polynomial Shapley algorithms.

struct BenchRow {
  std::string algorithm;
  int nodes = 0;
  std::size_t edges = 0;
  double model_cost = 0.0;
  double seconds = 0.0;
};

struct BenchFamily {
  std::string algorithm;
  std::string complexity;
  double slope = 0.0;
  bool consistent = false;  // fitted slope within a factor of two of 1
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchFamily> families;
};

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t k = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

// Seconds per call: repeats until at least 50 ms accumulate, best of three.
inline double time_call(const std::function<void()>& fn) {
  double best = 1e300;
  for (int round = 0; round < 3; ++round) {
    int reps = 0;
    const auto start = std::chrono::steady_clock::now();
    double elapsed = 0.0;
    do {
      fn();
      ++reps;
      elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } while (elapsed < 0.05);
    best = std::min(best, elapsed / reps);
  }
  return best;
}

inline BenchReport run_bench(double scale = 1.0, std::uint64_t seed = 7) {
  BenchReport report;
  struct Family {
    std::string name;
    std::string complexity;
    std::vector<int> sizes;
    std::function<void(const Graph&)> run;
    bool quadratic;
  };
  const auto sizes = [scale](std::vector<int> base) {
    for (int& s : base) s = std::max(16, static_cast<int>(s * scale));
    return base;
  };
  const std::vector<Family> families = {
      {"g1 sv-degree", "O(|V|+|E|)", sizes({12500, 25000, 50000, 100000}),
       [](const Graph& g) { (void)sv_degree_fast(g); }, false},
      {"g2 sv-g2 (k=2)", "O(|V|+|E|)", sizes({12500, 25000, 50000, 100000}),
       [](const Graph& g) { (void)sv_g2_fast(g, 2); }, false},
      {"g3 sv-cutoff (d=2)", "O(|V||E|+|V|^2 log|V|)", sizes({250, 500, 1000, 2000}),
       [](const Graph& g) { (void)sv_cutoff_fast(g, 2.0); }, true},
      {"g4 sv-closeness (harmonic)", "O(|V||E|+|V|^2 log|V|)",
       sizes({250, 500, 1000, 2000}),
       [](const Graph& g) { (void)sv_closeness_fast(g, DistanceFunction::harmonic()); },
       true},
  };
  for (const Family& fam : families) {
    std::vector<double> cost, secs;
    for (int nv : fam.sizes) {
      const std::size_t ne = static_cast<std::size_t>(nv) * 5;
      const Graph g = random_gnm(nv, ne, seed + static_cast<std::uint64_t>(nv));
      BenchRow row;
      row.algorithm = fam.name;
      row.nodes = nv;
      row.edges = ne;
      const double v = nv, e = static_cast<double>(ne);
      row.model_cost = fam.quadratic ? v * e + v * v * std::log(v) : v + e;
      row.seconds = time_call([&] { fam.run(g); });
      cost.push_back(row.model_cost);
      secs.push_back(row.seconds);
      report.rows.push_back(row);
    }
    BenchFamily bf{fam.name, fam.complexity, loglog_slope(cost, secs), false};
    bf.consistent = bf.slope >= 0.5 && bf.slope <= 2.0;
    report.families.push_back(bf);
  }
  return report;
}

inline std::string format_bench(const BenchReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %8s %9s %14s %12s\n", "algorithm", "|V|", "|E|",
                "model cost", "seconds");
  out += buf;
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%-28s %8d %9zu %14.4g %12.6f\n", row.algorithm.c_str(),
                  row.nodes, row.edges, row.model_cost, row.seconds);
    out += buf;
  }
  out += "\n";
  std::snprintf(buf, sizeof buf, "%-28s %-24s %8s %s\n", "algorithm", "complexity",
                "slope", "consistent");
  out += buf;
  for (const auto& f : r.families) {
    std::snprintf(buf, sizeof buf, "%-28s %-24s %8.3f %s\n", f.algorithm.c_str(),
                  f.complexity.c_str(), f.slope, f.consistent ? "yes" : "no");
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entry point.

inline int report_error(std::ostream& err, const char* kind, const std::exception& e,
                        int code) {
  err << "gtcent: " << kind << ": " << e.what() << "\n";
  return code;
}

// Runs one command; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Game-theoretic network centrality"};
  app.name("gtcent");
  app.require_subcommand(1);

  ComputeArgs a;
  auto* compute_cmd = app.add_subcommand("compute", "compute a centrality measure");
  auto* compare_cmd = app.add_subcommand("compare", "compare a fast path with the oracle");
  auto* list_cmd = app.add_subcommand("list", "print the measure catalog");
  auto* bench_cmd = app.add_subcommand("bench", "timing report for the fast algorithms");

  std::map<std::string, CLI::Option*> optional_flags;
  for (auto* cmd : {compute_cmd, compare_cmd}) {
    cmd->add_option("--measure", a.measure, "measure name")->required();
    cmd->add_option("--graph", a.graph, "edge-list file")->required();
    cmd->add_flag("--directed", a.directed, "read the graph as directed");
  }
  const auto add_optional = [&](CLI::App* cmd, const std::string& name, auto& target,
                                const std::string& help) {
    auto* opt = cmd->add_option("--" + name, target, help);
    optional_flags[cmd->get_name() + "/" + name] = opt;
  };
  for (auto* cmd : {compute_cmd, compare_cmd}) {
    add_optional(cmd, "beta", a.beta, "shapley | banzhaf | point:K | FILE");
    add_optional(cmd, "alpha", a.alpha, "blend or Psi-alpha parameter in [0,1]");
    add_optional(cmd, "k", a.k, "threshold for the k-fringe game");
    add_optional(cmd, "cutoff", a.cutoff, "cutoff distance");
    add_optional(cmd, "f", a.f, "harmonic | indicator | const | exp:L | pow:P");
    add_optional(cmd, "communities", a.communities, "community file");
    add_optional(cmd, "game", a.game, "square | pow:K | count | unit");
    add_optional(cmd, "threshold", a.threshold, "uniform node threshold");
  }
  add_optional(compute_cmd, "mc-samples", a.mc_samples, "Monte Carlo sample count");
  add_optional(compute_cmd, "seed", a.seed, "random seed");
  compute_cmd->add_option("--format", a.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  compute_cmd->add_option("--out", a.out, "write output to this file");

  std::string suite;
  double scale = 1.0;
  std::string bench_format = "text";
  bench_cmd->add_option("--suite", suite, "benchmark suite")
      ->required()
      ->check(CLI::IsMember({"table"}));
  bench_cmd->add_option("--scale", scale, "size multiplier")->check(CLI::Range(0.001, 10.0));
  bench_cmd->add_option("--format", bench_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string active = compute_cmd->parsed()   ? "compute"
                             : compare_cmd->parsed() ? "compare"
                             : list_cmd->parsed()    ? "list"
                                                     : "bench";
  for (const auto& [key, opt] : optional_flags) {
    const auto slash = key.find('/');
    if (key.substr(0, slash) == active && opt->count() > 0) {
      a.given.insert(key.substr(slash + 1));
    }
  }

  try {
    if (active == "list") {
      char buf[256];
      for (const auto& m : measure_catalog()) {
        std::string flags;
        for (const auto& f : m.flags) flags += (flags.empty() ? "--" : " --") + f;
        std::snprintf(buf, sizeof buf, "%-27s %s%s%s\n", m.name.c_str(), m.summary.c_str(),
                      flags.empty() ? "" : "  [", flags.empty() ? "" : (flags + "]").c_str());
        out << buf;
      }
      return kExitOk;
    }
    if (active == "bench") {
      const BenchReport r = run_bench(scale);
      if (bench_format == "json") {
        nlohmann::ordered_json j;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : r.rows) {
          j["rows"].push_back({{"algorithm", row.algorithm},
                               {"nodes", row.nodes},
                               {"edges", row.edges},
                               {"model_cost", row.model_cost},
                               {"seconds", row.seconds}});
        }
        j["families"] = nlohmann::ordered_json::array();
        for (const auto& f : r.families) {
          j["families"].push_back({{"algorithm", f.algorithm},
                                   {"complexity", f.complexity},
                                   {"slope", f.slope},
                                   {"consistent", f.consistent}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << format_bench(r);
      }
      return kExitOk;
    }
    if (active == "compare") {
      const Graph g = load_graph(a.graph, a.directed);
      const Comparison c = compare_with_oracle(g, a);
      nlohmann::ordered_json j;
      j["measure"] = c.measure;
      j["n"] = c.n;
      j["m"] = c.m;
      j["fast_method"] = c.fast;
      j["oracle_method"] = c.oracle;
      j["max_abs_diff"] = round12(c.max_abs_diff);
      j["tolerance"] = kCompareTolerance;
      j["agree"] = c.max_abs_diff <= kCompareTolerance;
      out << j.dump(2) << "\n";
      return c.max_abs_diff <= kCompareTolerance ? kExitOk : kExitNumerical;
    }
    const ResultDocument doc = compute(a);
    const std::string text = a.format == "csv" ? serialize_csv(doc) : serialize_json(doc);
    if (a.out.empty()) {
      out << text;
    } else {
      write_file_atomic(a.out, text);
    }
    return kExitOk;
  } catch (const SizeLimitExceeded& e) {
    return report_error(err, "size bound exceeded", e, kExitSize);
  } catch (const NumericalFailure& e) {
    return report_error(err, "numerical failure", e, kExitNumerical);
  } catch (const InvalidInput& e) {
    return report_error(err, "invalid input", e, kExitUsage);
  } catch (const std::exception& e) {
    return report_error(err, "error", e, 1);
  }
}

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, out, err);
}

}  // namespace cli
}  // namespace gtcent

#endif  // GTCENT_CLI_HPP_
