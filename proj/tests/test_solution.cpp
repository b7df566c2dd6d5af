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

#include "gtcent/solution.hpp"
#include "support/oracles.hpp"

namespace gtcent {
namespace {

CharacteristicFunction table_game(int n, std::uint64_t seed) {
  return CharacteristicFunction::from_table(n, oracle::random_game(n, seed));
}

void expect_close(const std::vector<double>& a, const std::vector<double>& b,
                  double tol = 1e-9) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "player " << i;
}

// Contiguous partition of n players into blocks of the given sizes.
CoalitionStructure blocks(const std::vector<int>& sizes) {
  CoalitionStructure cs;
  int next = 0;
  for (int s : sizes) {
    Coalition q;
    for (int k = 0; k < s; ++k) q.insert(next++);
    cs.communities.push_back(q);
  }
  return cs;
}

std::vector<std::uint64_t> masks(const CoalitionStructure& cs) {
  std::vector<std::uint64_t> out;
  for (Coalition q : cs.communities) out.push_back(q.bits());
  return out;
}

class SeededGames : public ::testing::TestWithParam<int> {};

TEST_P(SeededGames, ShapleyFormsAgreeWithPermutationOracle) {
  const int seed = GetParam();
  const int n = 2 + seed % 5;
  const auto table = oracle::random_game(n, seed);
  const auto nu = CharacteristicFunction::from_table(n, table);
  const auto ref = oracle::shapley(n, table);
  expect_close(shapley_exact(nu).values, ref);
  expect_close(shapley_permutation_form(nu).values, ref);
  expect_close(shapley_from_dividends(nu).values, ref);
}

TEST_P(SeededGames, SemivalueAgreesWithOracle) {
  const int seed = GetParam();
  const int n = 2 + seed % 5;
  const auto table = oracle::random_game(n, seed + 50);
  const auto nu = CharacteristicFunction::from_table(n, table);
  SemivalueWeights beta(n);
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += beta[k] = 1.0 + (seed * 7 + k * 3) % 5;
  for (double& b : beta) b /= total;
  expect_close(semivalue_exact(nu, beta).values, oracle::semivalue(n, table, beta));
  expect_close(banzhaf(nu).values, oracle::semivalue(n, table, banzhaf_weights(n)));
}

TEST_P(SeededGames, OwenAgreesWithContiguousOrderOracle) {
  const int seed = GetParam();
  const int n = 6;
  const auto table = oracle::random_game(n, seed + 100);
  const auto nu = CharacteristicFunction::from_table(n, table);
  for (const auto& sizes : {std::vector<int>{2, 4}, std::vector<int>{1, 2, 3},
                            std::vector<int>{3, 3}, std::vector<int>{2, 2, 1, 1}}) {
    const CoalitionStructure cs = blocks(sizes);
    const auto ref = oracle::owen(n, table, masks(cs));
    expect_close(owen_value(nu, cs).values, ref);
    std::vector<SemivalueWeights> alpha;
    for (Coalition q : cs.communities) alpha.push_back(shapley_weights(q.size()));
    expect_close(coalitional_semivalue(nu, cs, shapley_weights(static_cast<int>(sizes.size())),
                                       alpha)
                     .values,
                 ref);
    expect_close(configuration_value(nu, cs).values, ref);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeededGames, ::testing::Range(1, 16));

TEST(Solution, ShapleyOfUnanimityGame) {
  const Coalition s{0, 2, 3};
  const auto sv = shapley_exact(unanimity_game(5, s));
  expect_close(sv.values, {1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3, 0.0}, 1e-12);
}

TEST(Solution, BanzhafVotingPower) {
  const VotingPower p = banzhaf_voting({4.0, 2.0, 1.0}, 5.0);
  EXPECT_EQ(p.swings, (std::vector<std::uint64_t>{3, 1, 1}));
  expect_close(p.relative, {0.6, 0.2, 0.2}, 1e-12);
  expect_close(p.normalized, {0.75, 0.25, 0.25}, 1e-12);
}

TEST(Solution, DictatorHasFullNormalizedPower) {
  const VotingPower p = banzhaf_voting({10.0, 1.0, 1.0, 1.0}, 10.0);
  expect_close(p.normalized, {1.0, 0.0, 0.0, 0.0}, 1e-12);
}

TEST(Solution, OverlappingCoverNeedsConfigurationValue) {
  const auto nu = table_game(4, 3);
  CoalitionStructure cover{{Coalition{0, 1, 2}, Coalition{2, 3}}, true};
  EXPECT_THROW(owen_value(nu, cover), InvalidInput);
  const auto cv = configuration_value(nu, cover);
  EXPECT_NEAR(cv.sum(), nu(Coalition::full(4)), 1e-9);
  CoalitionStructure gap{{Coalition{0, 1}}, false};
  EXPECT_THROW(owen_value(nu, gap), InvalidInput);
}

TEST(Solution, WeightedShapley) {
  const auto nu = table_game(5, 11);
  expect_close(weighted_shapley(nu, std::vector<double>(5, 2.0)).values,
               shapley_exact(nu).values);
  const auto u = unanimity_game(4, Coalition{0, 1});
  expect_close(weighted_shapley(u, {1.0, 3.0, 5.0, 5.0}).values, {0.25, 0.75, 0.0, 0.0}, 1e-12);
  EXPECT_THROW(weighted_shapley(u, {1.0, 0.0, 1.0, 1.0}), InvalidInput);
}

TEST(Solution, ProperShapleyOnAdditiveGame) {
  const auto nu = additive_game({0.2, 0.3, 0.5});
  EXPECT_TRUE(is_proper(nu, {0.2, 0.3, 0.5}));
  EXPECT_FALSE(is_proper(nu, {1.0 / 3, 1.0 / 3, 1.0 / 3}));
}

TEST(Solution, PsiAlphaEndpoints) {
  // Single dividend on the order (2, 0, 1).
  GeneralizedDividendTable d;
  d.n = 3;
  d.delta[{2, 0, 1}] = 6.0;
  expect_close(nowak_radzik(d).values, {0.0, 1.0, 0.0}, 1e-12);
  expect_close(sanchez_bergantinos(d).values, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-12);
  const auto half = psi_alpha(d, 0.5);
  EXPECT_NEAR(half.sum(), 1.0, 1e-12);
  EXPECT_GT(half[1], half[0]);
  EXPECT_GT(half[0], half[2]);
  EXPECT_THROW(psi_alpha(d, 1.5), InvalidInput);
}

TEST(Solution, InteractionIndices) {
  const auto u = unanimity_game(5, Coalition{0, 1, 2});
  EXPECT_NEAR(shapley_interaction(u, 0, 1), 0.5, 1e-12);
  EXPECT_NEAR(shapley_interaction(u, 0, 4), 0.0, 1e-12);
  const auto add = additive_game({1, 2, 3, 4});
  EXPECT_NEAR(synergy(add, Coalition{2}, 0, 1), 0.0, 1e-12);
  EXPECT_NEAR(shapley_interaction(add, 0, 1), 0.0, 1e-12);
  EXPECT_THROW(shapley_interaction(u, 1, 1), InvalidInput);

  const auto nu = table_game(5, 21);
  const auto shapley_fn = [](int m) { return shapley_weights(m); };
  EXPECT_NEAR(coalitional_interaction(nu, 1, 3, CoalitionStructure::grand(5), shapley_fn,
                                      shapley_fn),
              shapley_interaction(nu, 1, 3), 1e-10);
  EXPECT_NEAR(interaction_index(nu, 1, 3, ShapleyInteraction{}), shapley_interaction(nu, 1, 3),
              1e-12);
  EXPECT_NEAR(interaction_index(nu, 0, 2, SemivalueInteraction{banzhaf_weights(4)}),
              semivalue_interaction(nu, 0, 2, banzhaf_weights(4)), 1e-12);
}

TEST(MonteCarlo, DeterministicPerSeed) {
  const auto nu = table_game(6, 5);
  const auto a = mc_estimate(nu, ShapleySampling{}, 3000, 42);
  const auto b = mc_estimate(nu, ShapleySampling{}, 3000, 42);
  const auto c = mc_estimate(nu, ShapleySampling{}, 3000, 43);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.std_errors, b.std_errors);
  EXPECT_NE(a.values, c.values);
  EXPECT_EQ(a.method, Method::kMonteCarlo);
  EXPECT_EQ(a.samples, 3000u);
  EXPECT_EQ(a.seed, 42u);
}

TEST(MonteCarlo, SingleSampleHasZeroStdError) {
  const auto est = mc_estimate(table_game(4, 8), ShapleySampling{}, 1, 3);
  for (double se : est.std_errors) EXPECT_EQ(se, 0.0);
  EXPECT_THROW(mc_estimate(table_game(4, 8), ShapleySampling{}, 0, 3), InvalidInput);
}

TEST(MonteCarlo, EstimatorsConvergeToExactValues) {
  const int n = 6;
  const auto nu = table_game(n, 77);
  const CoalitionStructure cs = blocks({2, 3, 1});
  const SemivalueWeights beta = banzhaf_weights(n);
  std::vector<SemivalueWeights> alpha;
  for (Coalition q : cs.communities) alpha.push_back(shapley_weights(q.size()));
  struct Case {
    SamplingConcept concept_kind;
    std::vector<double> exact;
  };
  const std::vector<Case> cases = {
      {ShapleySampling{}, shapley_exact(nu).values},
      {SemivalueSampling{beta}, semivalue_exact(nu, beta).values},
      {OwenSampling{cs}, owen_value(nu, cs).values},
      {CoalitionalSampling{cs, banzhaf_weights(3), alpha},
       coalitional_semivalue(nu, cs, banzhaf_weights(3), alpha).values},
  };
  for (const auto& c : cases) {
    const auto est = mc_estimate(nu, c.concept_kind, 60000, 9);
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(est.std_errors[i], 0.0);
      EXPECT_NEAR(est[i], c.exact[i], 4.5 * est.std_errors[i] + 1e-12);
    }
  }
}

}  // namespace
}  // namespace gtcent
