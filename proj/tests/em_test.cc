/*
 * Copyright 2026 The sampest Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sampest/em.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "sampest/oracle.h"
#include "sampest/rank_model.h"
#include "sampest/sampling.h"

namespace sampest {
namespace {

std::vector<SampleRecord> Simulated(std::int64_t catalog, std::int64_t users,
                                    std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> rank(1, catalog);
  RankDataset dataset{catalog, {}};
  for (std::int64_t u = 0; u < users; ++u) {
    dataset.ranks.push_back(std::min(rank(rng), rank(rng)));
  }
  return SimulateFixed(dataset, n, seed + 1);
}

// Plain per-user EM for one shared sample size, written from the E/M-step
// definitions with no grouping.
std::vector<double> ReferenceFixedEm(const std::vector<SampleRecord>& samples,
                                     int catalog, int iterations) {
  std::vector<double> pi(catalog, 1.0 / catalog);
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> next(catalog, 0.0);
    for (const auto& s : samples) {
      std::vector<double> post(catalog);
      double norm = 0.0;
      for (int k = 0; k < catalog; ++k) {
        post[k] = pi[k] * oracle::ObservationProbability(
                              static_cast<int>(s.sampled_rank),
                              static_cast<int>(s.sample_size), k + 1,
                              catalog);
        norm += post[k];
      }
      for (int k = 0; k < catalog; ++k) next[k] += post[k] / norm;
    }
    for (auto& v : next) v /= static_cast<double>(samples.size());
    pi = next;
  }
  return pi;
}

TEST(GroupObservationsTest, CountsDistinctPairs) {
  std::vector<SampleRecord> samples = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  const auto groups = GroupObservations(samples);
  EXPECT_EQ(groups, (std::vector<ObservationGroup>{{1, 2, 2}, {2, 2, 1}}));
}

TEST(EmConfigTest, Validation) {
  EmConfig cfg;
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg.max_iters = 1;
  cfg.tol = 0.0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
}

TEST(FitRankPmfTest, SupportForcesDelta) {
  std::vector<SampleRecord> samples = {{0, 1, 2}};
  EmConfig cfg;
  cfg.init = RankPmf{{0.3, 0.7}};
  const auto result = FitRankPmf(samples, 2, cfg);
  EXPECT_EQ(result.pmf.probs, (std::vector<double>{1.0, 0.0}));
}

TEST(FitRankPmfTest, SingleIterationIsMeanPosterior) {
  const auto samples = Simulated(25, 200, 6, 3);
  EmConfig cfg;
  cfg.max_iters = 1;
  const auto result = FitRankPmf(samples, 25, cfg);
  EXPECT_EQ(result.iterations, 1);
  EXPECT_EQ(result.log_likelihoods.size(), 2u);
  const auto ref = ReferenceFixedEm(samples, 25, 1);
  for (int k = 0; k < 25; ++k) EXPECT_NEAR(result.pmf.probs[k], ref[k], 1e-14);
}

TEST(FitRankPmfTest, MatchesIndependentFixedSizeEm) {
  const auto samples = Simulated(60, 800, 10, 9);
  EmConfig cfg;
  cfg.max_iters = 40;
  cfg.tol = 1e-300;
  const auto result = FitRankPmf(samples, 60, cfg);
  EXPECT_EQ(result.iterations, 40);
  EXPECT_FALSE(result.converged);
  const auto ref = ReferenceFixedEm(samples, 60, 40);
  for (int k = 0; k < 60; ++k) EXPECT_NEAR(result.pmf.probs[k], ref[k], 1e-12);
}

TEST(FitRankPmfTest, GroupedEqualsUngrouped) {
  const auto samples = Simulated(90, 1500, 12, 4);
  const auto groups = GroupObservations(samples);
  EXPECT_EQ(FitRankPmf(samples, 90).pmf.probs,
            FitRankPmf(groups, 90).pmf.probs);
}

TEST(FitRankPmfTest, UserOrderDoesNotMatter) {
  auto samples = Simulated(70, 1000, 8, 5);
  const auto before = FitRankPmf(samples, 70);
  std::mt19937_64 rng(6);
  std::shuffle(samples.begin(), samples.end(), rng);
  const auto after = FitRankPmf(samples, 70);
  EXPECT_EQ(before.pmf.probs, after.pmf.probs);
  EXPECT_EQ(before.log_likelihoods, after.log_likelihoods);
}

TEST(FitRankPmfTest, MonotoneAndNormalizedWithMixedSizes) {
  RankDataset dataset{200, {}};
  for (int u = 0; u < 3000; ++u) dataset.ranks.push_back(1 + (u * u) % 200);
  const auto samples = SimulateAdaptive(dataset, {10, 160}, 7);
  std::vector<std::vector<double>> iterates;
  const auto groups = GroupObservations(samples);
  const auto result =
      FitRankPmf(groups, 200, {}, [&](int, std::span<const double> pmf) {
        iterates.emplace_back(pmf.begin(), pmf.end());
      });
  ASSERT_EQ(iterates.size(), result.log_likelihoods.size());
  for (std::size_t t = 1; t < result.log_likelihoods.size(); ++t) {
    EXPECT_GE(result.log_likelihoods[t], result.log_likelihoods[t - 1] - 1e-10);
  }
  for (const auto& pmf : iterates) {
    EXPECT_NEAR(std::accumulate(pmf.begin(), pmf.end(), 0.0), 1.0, 1e-12);
    EXPECT_GE(*std::min_element(pmf.begin(), pmf.end()), 0.0);
  }
  EXPECT_DOUBLE_EQ(result.log_likelihoods.back(),
                   ObservedLogLikelihood(groups, result.pmf));
}

TEST(FitRankPmfTest, PosteriorRowsSumToOne) {
  const int catalog = 40;
  const auto pmf = RankPmf::Uniform(catalog);
  for (int n : {3, 9, 20}) {
    for (int r = 1; r <= n; ++r) {
      const auto kernel = LikelihoodOverRanks(r, n, catalog);
      double norm = 0.0;
      for (int k = 0; k < catalog; ++k) norm += pmf.probs[k] * kernel[k];
      double total = 0.0;
      for (int k = 0; k < catalog; ++k) total += pmf.probs[k] * kernel[k] / norm;
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

// With n < N the likelihood is flat along a line; EM must still land on a
// maximizer, i.e. reach the grid optimum's log-likelihood.
TEST(FitRankPmfTest, SmallInstanceReachesGridMaximum) {
  std::vector<SampleRecord> samples = {{0, 1, 2}, {1, 2, 2}};
  EmConfig cfg;
  cfg.max_iters = 100000;
  cfg.tol = 1e-14;
  const auto em = FitRankPmf(samples, 3, cfg);
  std::vector<oracle::Observation> obs = {{1, 2}, {2, 2}};
  const auto grid = oracle::SimplexGridMle(obs, 3, 0.001);
  EXPECT_NEAR(oracle::MixtureLogLikelihood(obs, em.pmf.probs, 3),
              grid.log_likelihood, 1e-6);
  EXPECT_GE(oracle::MixtureLogLikelihood(obs, em.pmf.probs, 3),
            grid.log_likelihood - 1e-12);
  // Maximizers satisfy pi_1 + pi_2 / 2 = 1 / 2.
  EXPECT_NEAR(em.pmf.probs[0] + em.pmf.probs[1] / 2, 0.5, 1e-9);
  EXPECT_NEAR(grid.pmf[0] + grid.pmf[1] / 2, 0.5, 1e-3);
}

TEST(FitRankPmfTest, RejectsBadInput) {
  std::vector<SampleRecord> none;
  EXPECT_THROW(FitRankPmf(none, 5), std::invalid_argument);
  std::vector<SampleRecord> one = {{0, 1, 3}};
  EmConfig cfg;
  cfg.init = RankPmf::Uniform(4);
  EXPECT_THROW(FitRankPmf(one, 5, cfg), std::invalid_argument);
  // (r = 1, n = 2) has zero likelihood at R = 3.
  std::vector<SampleRecord> top = {{0, 1, 2}};
  cfg.init = RankPmf{{0.0, 0.0, 1.0}};
  EXPECT_THROW(FitRankPmf(top, 3, cfg), std::runtime_error);
}

TEST(AdaptiveMleEstimateTest, DeltaAtTop) {
  std::vector<SampleRecord> samples(5, SampleRecord{0, 1, 64});
  EXPECT_DOUBLE_EQ(
      AdaptiveMleEstimate(samples, 2, {MetricFamily::kRecall, 1}), 1.0);
}

TEST(AdaptiveMleEstimateTest, FixedSizeEqualsPlugInPipeline) {
  const auto samples = Simulated(120, 2000, 15, 8);
  const MetricSpec spec{MetricFamily::kNdcg, 10};
  const double direct =
      PluginMetricFromPmf(FitRankPmf(samples, 120).pmf, spec);
  EXPECT_EQ(AdaptiveMleEstimate(samples, 120, spec), direct);
}

// Per-iteration work scales with the number of distinct (r, n) pairs, not
// with the number of users.
TEST(FitRankPmfTest, CostScalesWithDistinctPairs) {
  const std::int64_t catalog = 2000;
  std::vector<SampleRecord> samples;
  for (std::int64_t u = 0; u < 100000; ++u) {
    samples.push_back({u, 1 + u % 37, 64});
  }
  const auto groups = GroupObservations(samples);
  ASSERT_EQ(groups.size(), 37u);
  EmConfig cfg;
  cfg.max_iters = 50;
  cfg.tol = 1e-300;
  auto time_fit = [&](std::span<const ObservationGroup> g) {
    const auto start = std::chrono::steady_clock::now();
    FitRankPmf(g, catalog, cfg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  const double t37 = time_fit(groups);
  std::vector<ObservationGroup> more;
  for (int n : {64, 128, 256, 512}) {
    for (int r = 1; r <= 37; ++r) more.push_back({r, n, 100});
  }
  const double t148 = time_fit(more);
  // 4x the pairs should take roughly 4x as long; allow generous slack.
  EXPECT_GT(t148, 1.5 * t37);
  EXPECT_LT(t148, 12.0 * t37);
}

}  // namespace
}  // namespace sampest
