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

#include "sampest/verify.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "sampest/core.h"
#include "sampest/em.h"
#include "sampest/estimators.h"
#include "sampest/oracle.h"
#include "sampest/rank_model.h"
#include "sampest/sampling.h"

namespace sampest {
namespace {

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

bool CheckSamplingLaw(std::string& detail) {
  double worst = 0.0;
  for (int n_items = 2; n_items <= 6; ++n_items) {
    for (int n = 2; n <= 4; ++n) {
      for (int rank = 1; rank <= n_items; ++rank) {
        const auto law = oracle::ExhaustiveSamplingLaw(n_items, n, rank);
        for (int r = 1; r <= n; ++r) {
          worst = std::max(worst, std::abs(law[r - 1] - RankLikelihood(
                                                            r, rank, n,
                                                            n_items)));
        }
      }
    }
  }
  detail = "max |enumerated - binomial| = " + std::to_string(worst);
  return worst <= 1e-12;
}

bool CheckClosedForms(std::string& detail) {
  const int n_items = 3;
  const int n = 2;
  const std::vector<double> prior = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const MetricSpec spec{MetricFamily::kRecall, 1};
  const LsProblem problem =
      MakeLsProblem(RankPmf{prior}, MakeConditionalMatrix(n, n_items), spec,
                    /*user_count=*/10);
  const auto cond = oracle::BinomialConditional(n, n_items);

  const auto mn_eq = oracle::MnNormalEquations(cond, prior, problem.target, 10);
  const auto mn_ref = oracle::DenseSolve(mn_eq.matrix, mn_eq.rhs);
  const double mn_err = MaxAbsDiff(SolveMn(problem).values, mn_ref);

  const auto bv_eq =
      oracle::BvNormalEquations(cond, prior, problem.target, kDefaultBvGamma);
  const auto bv_ref = oracle::DenseSolve(bv_eq.matrix, bv_eq.rhs);
  const double bv_err =
      MaxAbsDiff(SolveBv(problem, kDefaultBvGamma).values, bv_ref);
  detail = "MN err " + std::to_string(mn_err) + ", BV err " +
           std::to_string(bv_err);
  return mn_err <= 1e-10 && bv_err <= 1e-10;
}

bool CheckEmAgainstGrid(std::uint64_t seed, std::string& detail) {
  const int n_items = 3;
  const RankDataset dataset =
      RankDataset{n_items, std::vector<std::int64_t>{1, 1, 1, 1, 2, 2, 2, 3,
                                                     3, 3, 3, 3, 1, 2, 3, 1}};
  std::vector<SampleRecord> samples;
  for (int rep = 0; rep < 25; ++rep) {
    const auto draw = SimulateFixed(dataset, 5, DeriveSeed(seed, rep));
    samples.insert(samples.end(), draw.begin(), draw.end());
  }
  EmConfig config;
  config.max_iters = 200000;
  config.tol = 1e-13;
  const EmResult em = FitRankPmf(samples, n_items, config);

  std::vector<oracle::Observation> obs;
  for (const auto& s : samples) {
    obs.push_back({static_cast<int>(s.sampled_rank),
                   static_cast<int>(s.sample_size)});
  }
  const auto grid = oracle::SimplexGridMle(obs, n_items, 0.001);
  const double err = MaxAbsDiff(em.pmf.probs, grid.pmf);
  detail = "L-inf(EM, grid argmax) = " + std::to_string(err);
  return err <= 5e-3;
}

bool CheckVarianceIdentity(std::uint64_t seed, std::string& detail) {
  const std::vector<double> w = {0.3, 0.7, 1.2};
  const std::vector<double> theta = {0.2, 0.5, 0.3};
  const auto check =
      oracle::WeightedMultinomialVarianceCheck(w, theta, 50, 100000, seed);
  detail = "analytic " + std::to_string(check.analytic) + ", empirical " +
           std::to_string(check.empirical) + " (se " +
           std::to_string(check.standard_error) + ")";
  return check.WithinStandardErrors(4.0);
}

bool CheckSamplerGoodnessOfFit(std::uint64_t seed, std::string& detail) {
  const std::int64_t n_items = 100;
  const std::int64_t rank = 50;
  const std::int64_t n = 10;
  const std::int64_t draws = 100000;
  const RankDataset dataset{n_items, std::vector<std::int64_t>(draws, rank)};
  const auto samples = SimulateFixed(dataset, n, seed);
  std::vector<double> observed(n, 0.0);
  for (const auto& s : samples) observed[s.sampled_rank - 1] += 1.0;

  // Adjacent cells are pooled until each expects at least 5 draws; a short
  // tail joins the last full cell.
  std::vector<std::pair<double, double>> pooled;  // (observed, expected)
  double obs = 0.0;
  double expected = 0.0;
  for (std::int64_t r = 1; r <= n; ++r) {
    obs += observed[r - 1];
    expected += draws * RankLikelihood(r, rank, n, n_items);
    if (expected >= 5.0) {
      pooled.emplace_back(obs, expected);
      obs = 0.0;
      expected = 0.0;
    }
  }
  if (expected > 0.0 || obs > 0.0) {
    if (pooled.empty()) {
      pooled.emplace_back(obs, expected);
    } else {
      pooled.back().first += obs;
      pooled.back().second += expected;
    }
  }
  double stat = 0.0;
  for (const auto& [o, e] : pooled) stat += (o - e) * (o - e) / e;
  const int cells = static_cast<int>(pooled.size());
  const boost::math::chi_squared dist(cells - 1);
  const double critical = boost::math::quantile(complement(dist, 0.001));
  detail = "chi2 = " + std::to_string(stat) + " vs critical " +
           std::to_string(critical);
  return stat < critical;
}

}  // namespace

bool RunVerification(std::ostream& out, std::uint64_t seed) {
  struct Check {
    const char* name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  auto run = [&](const char* name, auto&& fn) {
    std::string detail;
    bool passed = false;
    try {
      passed = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    checks.push_back({name, passed, detail});
  };
  run("sampling law vs enumeration", CheckSamplingLaw);
  run("closed forms vs dense solve", CheckClosedForms);
  run("EM vs simplex grid",
      [&](std::string& d) { return CheckEmAgainstGrid(seed, d); });
  run("weighted multinomial variance",
      [&](std::string& d) { return CheckVarianceIdentity(seed, d); });
  run("fixed sampler chi-square fit",
      [&](std::string& d) { return CheckSamplerGoodnessOfFit(seed, d); });

  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail
        << '\n';
    all = all && c.passed;
  }
  return all;
}

}  // namespace sampest
