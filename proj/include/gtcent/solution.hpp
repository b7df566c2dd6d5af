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


#ifndef GTCENT_SOLUTION_HPP_
#define GTCENT_SOLUTION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/game.hpp"
#include "gtcent/random.hpp"

namespace gtcent {

enum class Method { kExact, kClosedForm, kMonteCarlo };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kClosedForm: return "closed-form";
    case Method::kMonteCarlo: return "mc";
  }
  return "unknown";
}

struct PayoffVector {
  std::vector<double> values;
  Method method = Method::kExact;
  // Populated for Monte Carlo estimates only.
  std::vector<double> std_errors;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
  }
};

// A priori community structure. Partitions are required everywhere except
// the configuration value, which accepts covers.
struct CoalitionStructure {
  std::vector<Coalition> communities;
  bool overlapping = false;

  void validate(int n) const {
    require(!communities.empty(), "community structure is empty");
    Coalition seen;
    for (Coalition q : communities) {
      require(!q.is_empty(), "empty community");
      require(q.subset_of(Coalition::full(n)),
              "community contains unknown players");
      if (!overlapping) {
        require(!q.intersects(seen), "communities overlap");
      }
      seen = seen | q;
    }
    require(seen == Coalition::full(n),
            "every player must belong to some community");
  }

  int index_of(int player) const {
    for (std::size_t k = 0; k < communities.size(); ++k) {
      if (communities[k].contains(player)) return static_cast<int>(k);
    }
    return -1;
  }

  static CoalitionStructure singletons(int n) {
    CoalitionStructure cs;
    for (int i = 0; i < n; ++i) cs.communities.push_back(Coalition::singleton(i));
    return cs;
  }
  static CoalitionStructure grand(int n) {
    return CoalitionStructure{{Coalition::full(n)}, false};
  }
};

// ---------------------------------------------------------------------------
// Shapley value and semivalues.

// Subset form with exact factorial-ratio coefficients.
inline PayoffVector shapley_exact(const CharacteristicFunction& nu,
                                  std::size_t bound = kSubsetBound) {
  const int n = nu.num_players();
  const auto v = nu.tabulate(bound);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = shapley_weight(n, k);
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t c = 0; c < v.size(); ++c) {
    const int k = std::popcount(c);
    if (k == n) continue;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (c & bit) continue;
      out.values[i] += w[k] * (v[c | bit] - v[c]);
    }
  }
  return out;
}

// Average marginal contribution over all n! orders.
inline PayoffVector shapley_permutation_form(const CharacteristicFunction& nu,
                                             std::size_t bound = kOrderedBound) {
  const int n = nu.num_players();
  require_size(static_cast<std::size_t>(n), bound, "permutation enumeration");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  double count = 0.0;
  do {
    Coalition c;
    double prev = 0.0;
    for (int i : perm) {
      c.insert(i);
      const double cur = nu(c);
      out.values[i] += cur - prev;
      prev = cur;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (double& x : out.values) x /= count;
  return out;
}

inline PayoffVector shapley_from_dividends(const DividendTable& d) {
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(d.n), 0.0);
  for (std::uint64_t c = 1; c < d.delta.size(); ++c) {
    if (d.delta[c] == 0.0) continue;
    const double share = d.delta[c] / std::popcount(c);
    Coalition(c).for_each([&](int i) { out.values[i] += share; });
  }
  return out;
}

inline PayoffVector shapley_from_dividends(const CharacteristicFunction& nu,
                                           std::size_t bound = kSubsetBound) {
  return shapley_from_dividends(harsanyi_dividends(nu, bound));
}

// phi_i = sum_k beta(k) * mean marginal over k-subsets of the other players.
inline PayoffVector semivalue_exact(const CharacteristicFunction& nu,
                                    const SemivalueWeights& beta,
                                    std::size_t bound = kSubsetBound) {
  const int n = nu.num_players();
  validate_weights(beta, n);
  const auto v = nu.tabulate(bound);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = beta[k] / binomial(n - 1, k);
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t c = 0; c < v.size(); ++c) {
    const int k = std::popcount(c);
    if (k == n || w[k] == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (c & bit) continue;
      out.values[i] += w[k] * (v[c | bit] - v[c]);
    }
  }
  return out;
}

inline PayoffVector banzhaf(const CharacteristicFunction& nu,
                            std::size_t bound = kSubsetBound) {
  return semivalue_exact(nu, banzhaf_weights(nu.num_players()), bound);
}

struct VotingPower {
  std::vector<std::uint64_t> swings;
  std::vector<double> relative;    // S_i / sum_j S_j
  std::vector<double> normalized;  // S_i / 2^(n-1)
};

// Swing counts of a monotone simple game.
inline VotingPower banzhaf_simple(const CharacteristicFunction& nu,
                                  std::size_t bound = kSubsetBound) {
  const int n = nu.num_players();
  const auto v = nu.tabulate(bound);
  VotingPower p;
  p.swings.assign(static_cast<std::size_t>(n), 0);
  for (std::uint64_t c = 0; c < v.size(); ++c) {
    require(v[c] == 0.0 || v[c] == 1.0, "simple game must be 0/1 valued");
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (c & bit) continue;
      require(v[c | bit] >= v[c], "simple game must be monotone");
      if (v[c] == 0.0 && v[c | bit] == 1.0) ++p.swings[i];
    }
  }
  const double total = static_cast<double>(
      std::accumulate(p.swings.begin(), p.swings.end(), std::uint64_t{0}));
  require(total > 0.0, "no swings: relative Banzhaf index is undefined");
  const double denom = std::ldexp(1.0, n - 1);
  for (int i = 0; i < n; ++i) {
    p.relative.push_back(static_cast<double>(p.swings[i]) / total);
    p.normalized.push_back(static_cast<double>(p.swings[i]) / denom);
  }
  return p;
}

inline CharacteristicFunction weighted_voting_game(std::vector<double> weights,
                                                   double quota) {
  const int n = static_cast<int>(weights.size());
  return CharacteristicFunction(n, [weights = std::move(weights),
                                    quota](Coalition c) {
    double total = 0.0;
    c.for_each([&](int i) { total += weights[i]; });
    return total >= quota ? 1.0 : 0.0;
  });
}

inline VotingPower banzhaf_voting(const std::vector<double>& weights,
                                  double quota) {
  return banzhaf_simple(weighted_voting_game(weights, quota));
}

// ---------------------------------------------------------------------------
// Community-based values.

namespace detail {

inline Coalition union_of(const CoalitionStructure& cs, std::uint64_t pick) {
  Coalition u;
  for (std::uint64_t b = pick; b != 0; b &= b - 1) {
    u = u | cs.communities[static_cast<std::size_t>(std::countr_zero(b))];
  }
  return u;
}

}  // namespace detail

// Coalitional semivalue with community-level weights beta over
// {0..|CS|-1} and per-community weights alpha[q] over {0..|Q|-1}.
inline PayoffVector coalitional_semivalue(
    const CharacteristicFunction& nu, const CoalitionStructure& cs,
    const SemivalueWeights& beta, const std::vector<SemivalueWeights>& alpha,
    std::size_t bound = kSubsetBound) {
  const int n = nu.num_players();
  require(!cs.overlapping, "coalitional semivalues need a partition");
  cs.validate(n);
  const int m = static_cast<int>(cs.communities.size());
  require_size(static_cast<std::size_t>(m), bound, "community enumeration");
  validate_weights(beta, m, "community weights");
  require(alpha.size() == cs.communities.size(),
          "one intra-community weight vector per community is required");
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (int q = 0; q < m; ++q) {
    const Coalition community = cs.communities[q];
    const int qs = community.size();
    require_size(static_cast<std::size_t>(qs), bound, "community size");
    validate_weights(alpha[q], qs, "intra-community weights");
    const std::uint64_t others = Coalition::full(m).without(q).bits();
    community.for_each([&](int i) {
      const Coalition rest = community.without(i);
      double total = 0.0;
      for (std::uint64_t t = others;; t = (t - 1) & others) {
        const int ts = std::popcount(t);
        const double wt = beta[ts] / binomial(m - 1, ts);
        if (wt != 0.0) {
          const Coalition base = detail::union_of(cs, t);
          for_each_subset(rest, [&](Coalition c) {
            const int k = c.size();
            const double wc = alpha[q][k] / binomial(qs - 1, k);
            if (wc == 0.0) return;
            const Coalition s = base | c;
            total += wt * wc * (nu(s.with(i)) - nu(s));
          });
        }
        if (t == 0) break;
      }
      out.values[i] = total;
    });
  }
  return out;
}

inline PayoffVector owen_value(const CharacteristicFunction& nu,
                               const CoalitionStructure& cs,
                               std::size_t bound = kSubsetBound) {
  const int m = static_cast<int>(cs.communities.size());
  std::vector<SemivalueWeights> alpha;
  for (Coalition q : cs.communities) alpha.push_back(shapley_weights(q.size()));
  return coalitional_semivalue(nu, cs, shapley_weights(m), alpha, bound);
}

// Owen's generalisation to overlapping community covers.
inline PayoffVector configuration_value(const CharacteristicFunction& nu,
                                        CoalitionStructure cs,
                                        std::size_t bound = kSubsetBound) {
  const int n = nu.num_players();
  cs.overlapping = true;
  cs.validate(n);
  const int m = static_cast<int>(cs.communities.size());
  require_size(static_cast<std::size_t>(m), bound, "community enumeration");
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t mine = 0;
    for (int q = 0; q < m; ++q) {
      if (cs.communities[q].contains(i)) mine |= std::uint64_t{1} << q;
    }
    const std::uint64_t others = Coalition::full(m).bits() & ~mine;
    double total = 0.0;
    for (std::uint64_t t = others;; t = (t - 1) & others) {
      const double wt = shapley_weight(m, std::popcount(t));
      const Coalition base = detail::union_of(cs, t);
      for (std::uint64_t b = mine; b != 0; b &= b - 1) {
        const Coalition community = cs.communities[std::countr_zero(b)];
        const int qs = community.size();
        for_each_subset(community.without(i), [&](Coalition c) {
          const Coalition s = base | c;
          total += wt * shapley_weight(qs, c.size()) * (nu(s.with(i)) - nu(s));
        });
      }
      if (t == 0) break;
    }
    out.values[i] = total;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weighted Shapley value.

namespace detail {

inline std::vector<double> weighted_shapley_unchecked(
    const DividendTable& d, const std::vector<double>& w) {
  std::vector<double> out(static_cast<std::size_t>(d.n), 0.0);
  for (std::uint64_t c = 1; c < d.delta.size(); ++c) {
    if (d.delta[c] == 0.0) continue;
    double total = 0.0;
    Coalition(c).for_each([&](int i) { total += w[i]; });
    if (total <= 0.0) {
      // Dividend on a zero-weight coalition cannot be shared.
      for (double& x : out) x = std::numeric_limits<double>::quiet_NaN();
      return out;
    }
    Coalition(c).for_each(
        [&](int i) { out[i] += w[i] / total * d.delta[c]; });
  }
  return out;
}

}  // namespace detail

inline PayoffVector weighted_shapley(const CharacteristicFunction& nu,
                                     const std::vector<double>& omega,
                                     std::size_t bound = kSubsetBound) {
  require(static_cast<int>(omega.size()) == nu.num_players(),
          "one weight per player is required");
  for (double w : omega) {
    require(std::isfinite(w) && w > 0.0, "weights must be strictly positive");
  }
  PayoffVector out;
  out.values =
      detail::weighted_shapley_unchecked(harsanyi_dividends(nu, bound), omega);
  return out;
}

// x is proper when the weighted Shapley value with weights x reproduces x.
// Zero weights are allowed here; a dividend on an all-zero-weight coalition
// makes x improper.
inline bool is_proper(const DividendTable& d, const std::vector<double>& x,
                      double tol = 1e-6) {
  require(static_cast<int>(x.size()) == d.n, "one weight per player is required");
  for (double w : x) require(std::isfinite(w) && w >= 0.0, "weights must be >= 0");
  const auto sv = detail::weighted_shapley_unchecked(d, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(std::abs(sv[i] - x[i]) <= tol)) return false;
  }
  return true;
}

inline bool is_proper(const CharacteristicFunction& nu,
                      const std::vector<double>& x, double tol = 1e-6,
                      std::size_t bound = kSubsetBound) {
  return is_proper(harsanyi_dividends(nu, bound), x, tol);
}

// ---------------------------------------------------------------------------
// Values of generalised games.

// Psi^alpha: each dividend is split along its sequence with geometric
// weights alpha^(|S| - position); 0^0 = 1.
inline PayoffVector psi_alpha(const GeneralizedDividendTable& d, double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  PayoffVector out;
  out.values.assign(static_cast<std::size_t>(d.n), 0.0);
  for (const auto& [pi, delta] : d.delta) {
    const int s = static_cast<int>(pi.size());
    double norm = 0.0;
    for (int j = 0; j < s; ++j) norm += std::pow(alpha, j);
    const double scale = delta / (factorial(s) * norm);
    for (int p = 0; p < s; ++p) {
      out.values[pi[p]] += scale * std::pow(alpha, s - 1 - p);
    }
  }
  return out;
}

inline PayoffVector nowak_radzik(const GeneralizedDividendTable& d) {
  return psi_alpha(d, 0.0);
}

inline PayoffVector sanchez_bergantinos(const GeneralizedDividendTable& d) {
  return psi_alpha(d, 1.0);
}

inline PayoffVector psi_alpha(const GeneralizedCharacteristicFunction& nu,
                              double alpha,
                              std::size_t bound = kOrderedBound) {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  return psi_alpha(generalized_dividends(nu, bound), alpha);
}

inline PayoffVector nowak_radzik(const GeneralizedCharacteristicFunction& nu,
                                 std::size_t bound = kOrderedBound) {
  return psi_alpha(nu, 0.0, bound);
}

inline PayoffVector sanchez_bergantinos(
    const GeneralizedCharacteristicFunction& nu,
    std::size_t bound = kOrderedBound) {
  return psi_alpha(nu, 1.0, bound);
}

// ---------------------------------------------------------------------------
// Interaction indices.

// nu(C + i + j) - nu(C + i) - nu(C + j) + nu(C)
inline double synergy(const CharacteristicFunction& nu, Coalition c, int i,
                      int j) {
  return nu(c.with(i).with(j)) - nu(c.with(i)) - nu(c.with(j)) + nu(c);
}

namespace detail {

inline void check_pair(const CharacteristicFunction& nu, int i, int j) {
  const int n = nu.num_players();
  require(i >= 0 && i < n && j >= 0 && j < n, "player out of range");
  require(i != j, "interaction index needs two distinct players");
}

}  // namespace detail

// beta over sizes {0..n-2} of coalitions drawn from I \ {i, j}.
inline double semivalue_interaction(const CharacteristicFunction& nu, int i,
                                    int j, const SemivalueWeights& beta,
                                    std::size_t bound = kSubsetBound) {
  detail::check_pair(nu, i, j);
  const int n = nu.num_players();
  require_size(static_cast<std::size_t>(n), bound, "interaction index");
  validate_weights(beta, n - 1, "interaction weights");
  const Coalition rest = nu.grand().without(i).without(j);
  double total = 0.0;
  for_each_subset(rest, [&](Coalition c) {
    const int k = c.size();
    if (beta[k] == 0.0) return;
    total += beta[k] / binomial(n - 2, k) * synergy(nu, c, i, j);
  });
  return total;
}

inline double shapley_interaction(const CharacteristicFunction& nu, int i,
                                  int j, std::size_t bound = kSubsetBound) {
  detail::check_pair(nu, i, j);
  return semivalue_interaction(nu, i, j, shapley_weights(nu.num_players() - 1),
                               bound);
}

// Community level: T drawn from the communities holding neither i nor j;
// member level: C drawn from the union of their communities minus {i, j}.
inline double coalitional_interaction(
    const CharacteristicFunction& nu, int i, int j,
    const CoalitionStructure& cs,
    const std::function<SemivalueWeights(int)>& beta,
    const std::function<SemivalueWeights(int)>& alpha,
    std::size_t bound = kSubsetBound) {
  detail::check_pair(nu, i, j);
  const int n = nu.num_players();
  require(!cs.overlapping, "coalitional interaction needs a partition");
  cs.validate(n);
  const int m = static_cast<int>(cs.communities.size());
  require_size(static_cast<std::size_t>(m), bound, "community enumeration");
  const int qi = cs.index_of(i);
  const int qj = cs.index_of(j);
  std::uint64_t mine = (std::uint64_t{1} << qi) | (std::uint64_t{1} << qj);
  const std::uint64_t others = Coalition::full(m).bits() & ~mine;
  const int outer = std::popcount(others);
  const Coalition inner =
      (cs.communities[qi] | cs.communities[qj]).without(i).without(j);
  const int inner_size = inner.size();
  const SemivalueWeights b = beta(outer + 1);
  const SemivalueWeights a = alpha(inner_size + 1);
  validate_weights(b, outer + 1, "community interaction weights");
  validate_weights(a, inner_size + 1, "member interaction weights");
  double total = 0.0;
  for (std::uint64_t t = others;; t = (t - 1) & others) {
    const int ts = std::popcount(t);
    const double wt = b[ts] / binomial(outer, ts);
    if (wt != 0.0) {
      const Coalition base = detail::union_of(cs, t);
      for_each_subset(inner, [&](Coalition c) {
        const int k = c.size();
        const double wc = a[k] / binomial(inner_size, k);
        if (wc != 0.0) total += wt * wc * synergy(nu, base | c, i, j);
      });
    }
    if (t == 0) break;
  }
  return total;
}

struct ShapleyInteraction {};
struct SemivalueInteraction {
  SemivalueWeights beta;
};
struct CoalitionalInteraction {
  CoalitionStructure cs;
  std::function<SemivalueWeights(int)> beta;
  std::function<SemivalueWeights(int)> alpha;
};
using InteractionKind =
    std::variant<ShapleyInteraction, SemivalueInteraction, CoalitionalInteraction>;

inline double interaction_index(const CharacteristicFunction& nu, int i, int j,
                                const InteractionKind& kind) {
  if (std::holds_alternative<ShapleyInteraction>(kind)) {
    return shapley_interaction(nu, i, j);
  }
  if (const auto* s = std::get_if<SemivalueInteraction>(&kind)) {
    return semivalue_interaction(nu, i, j, s->beta);
  }
  const auto& c = std::get<CoalitionalInteraction>(kind);
  return coalitional_interaction(nu, i, j, c.cs, c.beta, c.alpha);
}

// ---------------------------------------------------------------------------
// Monte Carlo estimation.

struct ShapleySampling {};
struct SemivalueSampling {
  SemivalueWeights beta;
};
struct OwenSampling {
  CoalitionStructure cs;
};
struct CoalitionalSampling {
  CoalitionStructure cs;
  SemivalueWeights beta;
  std::vector<SemivalueWeights> alpha;
};
using SamplingConcept = std::variant<ShapleySampling, SemivalueSampling,
                                     OwenSampling, CoalitionalSampling>;

inline constexpr std::uint64_t kSampleBlock = 1024;

namespace detail {

struct Accumulator {
  std::vector<double> sum;
  std::vector<double> sum_sq;
  std::vector<std::uint64_t> count;

  explicit Accumulator(int n)
      : sum(static_cast<std::size_t>(n), 0.0),
        sum_sq(static_cast<std::size_t>(n), 0.0),
        count(static_cast<std::size_t>(n), 0) {}

  void add(int i, double x) {
    sum[i] += x;
    sum_sq[i] += x * x;
    ++count[i];
  }

  PayoffVector finish(std::uint64_t samples, std::uint64_t seed) const {
    PayoffVector out;
    out.method = Method::kMonteCarlo;
    out.samples = samples;
    out.seed = seed;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      const double m = static_cast<double>(count[i]);
      const double mean = m > 0 ? sum[i] / m : 0.0;
      double se = 0.0;
      if (m > 1) {
        const double var = std::max(0.0, (sum_sq[i] - m * mean * mean) / (m - 1));
        se = std::sqrt(var / m);
      }
      out.values.push_back(mean);
      out.std_errors.push_back(se);
    }
    return out;
  }
};

inline void marginals_along(const CharacteristicFunction& nu,
                            const std::vector<int>& order, Accumulator& acc) {
  Coalition c;
  double prev = 0.0;
  for (int i : order) {
    c.insert(i);
    const double cur = nu(c);
    acc.add(i, cur - prev);
    prev = cur;
  }
}

inline std::vector<int> random_order(const CoalitionStructure& cs, Rng& rng) {
  std::vector<int> blocks(cs.communities.size());
  std::iota(blocks.begin(), blocks.end(), 0);
  rng.shuffle(blocks);
  std::vector<int> order;
  for (int b : blocks) {
    auto members = cs.communities[b].members();
    rng.shuffle(members);
    order.insert(order.end(), members.begin(), members.end());
  }
  return order;
}

}  // namespace detail

// Unbiased sampling estimator. Permutation sampling for Shapley and Owen
// (one order yields a marginal for every player); size-then-subset sampling
// per player for semivalues. Samples are drawn in blocks of kSampleBlock
// whose generators derive from (seed, block index).
inline PayoffVector mc_estimate(const CharacteristicFunction& nu,
                                const SamplingConcept& concept_kind,
                                std::uint64_t samples, std::uint64_t seed) {
  require(samples >= 1, "at least one sample is required");
  const int n = nu.num_players();
  detail::Accumulator acc(n);
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;

  if (std::holds_alternative<ShapleySampling>(concept_kind) ||
      std::holds_alternative<OwenSampling>(concept_kind)) {
    const CoalitionStructure cs =
        std::holds_alternative<OwenSampling>(concept_kind)
            ? std::get<OwenSampling>(concept_kind).cs
            : CoalitionStructure::grand(n);
    cs.validate(n);
    require(!cs.overlapping, "Owen sampling needs a partition");
    for (std::uint64_t b = 0; b < blocks; ++b) {
      Rng rng = Rng::stream(seed, b);
      const std::uint64_t len = std::min(kSampleBlock, samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < len; ++s) {
        detail::marginals_along(nu, detail::random_order(cs, rng), acc);
      }
    }
    return acc.finish(samples, seed);
  }

  if (const auto* sv = std::get_if<SemivalueSampling>(&concept_kind)) {
    validate_weights(sv->beta, n);
    std::vector<int> others;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      Rng rng = Rng::stream(seed, b);
      const std::uint64_t len = std::min(kSampleBlock, samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < len; ++s) {
        for (int i = 0; i < n; ++i) {
          others.clear();
          for (int j = 0; j < n; ++j) if (j != i) others.push_back(j);
          const std::size_t k = rng.pick(sv->beta);
          rng.partial_shuffle(others, k);
          Coalition c;
          for (std::size_t t = 0; t < k; ++t) c.insert(others[t]);
          acc.add(i, nu(c.with(i)) - nu(c));
        }
      }
    }
    return acc.finish(samples, seed);
  }

  const auto& co = std::get<CoalitionalSampling>(concept_kind);
  require(!co.cs.overlapping, "coalitional sampling needs a partition");
  co.cs.validate(n);
  const int m = static_cast<int>(co.cs.communities.size());
  validate_weights(co.beta, m, "community weights");
  require(co.alpha.size() == co.cs.communities.size(),
          "one intra-community weight vector per community is required");
  for (int q = 0; q < m; ++q) {
    validate_weights(co.alpha[q], co.cs.communities[q].size(),
                     "intra-community weights");
  }
  std::vector<int> other_blocks;
  std::vector<int> mates;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    Rng rng = Rng::stream(seed, b);
    const std::uint64_t len = std::min(kSampleBlock, samples - b * kSampleBlock);
    for (std::uint64_t s = 0; s < len; ++s) {
      for (int i = 0; i < n; ++i) {
        const int q = co.cs.index_of(i);
        other_blocks.clear();
        for (int r = 0; r < m; ++r) if (r != q) other_blocks.push_back(r);
        const std::size_t t = rng.pick(co.beta);
        rng.partial_shuffle(other_blocks, t);
        Coalition c;
        for (std::size_t r = 0; r < t; ++r) {
          c = c | co.cs.communities[other_blocks[r]];
        }
        mates = co.cs.communities[q].without(i).members();
        const std::size_t k = rng.pick(co.alpha[q]);
        rng.partial_shuffle(mates, k);
        for (std::size_t r = 0; r < k; ++r) c.insert(mates[r]);
        acc.add(i, nu(c.with(i)) - nu(c));
      }
    }
  }
  return acc.finish(samples, seed);
}

}  // namespace gtcent

#endif  // GTCENT_SOLUTION_HPP_
