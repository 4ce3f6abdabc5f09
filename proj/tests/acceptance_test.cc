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

// Acceptance suite. Each test is one criterion and prints a single
// "[criterion N] PASS|FAIL" line with its measured quantities.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "sampest/core.h"
#include "sampest/em.h"
#include "sampest/estimators.h"
#include "sampest/experiment.h"
#include "sampest/oracle.h"
#include "sampest/rank_model.h"
#include "sampest/sampling.h"

namespace sampest {
namespace {

// Prints the verdict line when the test body ends and enforces the time
// budget.
class Criterion {
 public:
  Criterion(int id, const char* title, double budget_seconds)
      : id_(id),
        title_(title),
        budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  ~Criterion() {
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
    if (budget_ > 0.0 && elapsed >= budget_) {
      ADD_FAILURE() << "runtime " << elapsed << " s exceeds " << budget_
                    << " s";
    }
    const bool ok = !::testing::Test::HasFailure();
    std::printf("[criterion %d] %s  %s (%.2f s)%s%s\n", id_,
                ok ? "PASS" : "FAIL", title_, elapsed,
                notes_.empty() ? "" : "  ", notes_.c_str());
    std::fflush(stdout);
  }

  void Note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }

 private:
  int id_;
  const char* title_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::string notes_;
};

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

RankPmf RandomPmf(std::int64_t size, std::mt19937_64& rng, double floor) {
  std::gamma_distribution<double> g(1.0);
  RankPmf pmf{std::vector<double>(size)};
  double sum = 0.0;
  for (auto& p : pmf.probs) sum += (p = g(rng) + floor);
  for (auto& p : pmf.probs) p /= sum;
  return pmf;
}

constexpr MetricFamily kFamilies[] = {MetricFamily::kRecall,
                                      MetricFamily::kNdcg, MetricFamily::kAp};

TEST(Acceptance, Criterion01IdentityLimit) {
  Criterion c(1, "identity limit (exact n = N)", 1.0);
  const std::int64_t catalog = 200;
  const RankDataset dataset = SynthZipfRanks(catalog, 5000, 1.2, 101);
  const auto samples = SimulateExact(dataset);
  std::mt19937_64 rng(102);
  const RankPmf prior = RandomPmf(catalog, rng, 1e-3);
  const auto cond = MakeConditionalMatrix(catalog, catalog, true);
  double worst_x = 0.0;
  double worst_est = 0.0;
  for (auto family : kFamilies) {
    for (int k : {1, 5, 10}) {
      const MetricSpec spec{family, k};
      const auto problem = MakeLsProblem(prior, cond, spec, 5000);
      const auto x = SolveMn(problem);
      for (std::int64_t r = 0; r < catalog; ++r) {
        worst_x = std::max(worst_x, std::abs(x.values[r] - problem.target[r]));
      }
      const double est = EstimateWithAdjusted(samples, catalog, spec, prior,
                                              LsMethod::kMn, kDefaultBvGamma,
                                              true);
      worst_est =
          std::max(worst_est, std::abs(est - GlobalMetric(dataset, spec)));
    }
  }
  c.Note("max|x-b| " + Fmt("%.3g", worst_x) + ", max|est-true| " +
         Fmt("%.3g", worst_est));
  EXPECT_LE(worst_x, 1e-9);
  EXPECT_LE(worst_est, 1e-9);
}

TEST(Acceptance, Criterion02EmMonotoneAndNormalized) {
  Criterion c(2, "EM monotone and normalized on 50 random mixed-n datasets",
              60.0);
  std::mt19937_64 rng(201);
  double worst_drop = 0.0;
  double worst_norm = 0.0;
  double most_negative = 0.0;
  int total_iters = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t catalog = 10 + static_cast<std::int64_t>(rng() % 491);
    const std::int64_t users = 200 + static_cast<std::int64_t>(rng() % 2801);
    const double exponent = 0.3 + 1.5 * std::generate_canonical<double, 53>(rng);
    const RankDataset dataset =
        SynthZipfRanks(catalog, users, exponent, rng());
    const std::int64_t n0 = 2 + static_cast<std::int64_t>(rng() % 19);
    const int levels = 1 + static_cast<int>(rng() % 4);
    std::int64_t nmax = n0 << levels;
    const auto samples = SimulateAdaptive(dataset, {n0, nmax}, rng());
    const auto groups = GroupObservations(samples);
    double max_norm = 0.0;
    double min_entry = 0.0;
    const EmResult result = FitRankPmf(
        groups, catalog, {}, [&](int, std::span<const double> pmf) {
          double sum = 0.0;
          for (double p : pmf) {
            sum += p;
            min_entry = std::min(min_entry, p);
          }
          max_norm = std::max(max_norm, std::abs(sum - 1.0));
        });
    for (std::size_t t = 1; t < result.log_likelihoods.size(); ++t) {
      worst_drop = std::max(worst_drop, result.log_likelihoods[t - 1] -
                                            result.log_likelihoods[t]);
    }
    worst_norm = std::max(worst_norm, max_norm);
    most_negative = std::min(most_negative, min_entry);
    total_iters += result.iterations;
  }
  c.Note("max LL drop " + Fmt("%.3g", worst_drop) + ", max |sum-1| " +
         Fmt("%.3g", worst_norm) + ", iterations " +
         std::to_string(total_iters));
  EXPECT_LE(worst_drop, 1e-10);
  EXPECT_LE(worst_norm, 1e-12);
  EXPECT_GE(most_negative, 0.0);
}

TEST(Acceptance, Criterion03EmMatchesGridOracle) {
  Criterion c(3, "EM equals simplex-grid MLE on small catalogs", 30.0);
  std::mt19937_64 rng(301);
  const int catalogs[] = {2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4};
  double worst = 0.0;
  int instances = 0;
  for (int catalog : catalogs) {
    const RankPmf truth = RandomPmf(catalog, rng, 0.2);
    const std::int64_t users = 400 + static_cast<std::int64_t>(rng() % 1601);
    const RankDataset dataset = SynthRanksFromPmf(truth, users, rng());
    // n >= N keeps the mixture identifiable; alternate fixed and mixed n.
    std::vector<SampleRecord> samples;
    if (instances % 2 == 0) {
      samples = SimulateFixed(dataset, catalog + 1 + rng() % 3, rng());
    } else {
      samples = SimulateAdaptive(dataset, {catalog, 4 * catalog}, rng());
    }
    EmConfig cfg;
    cfg.max_iters = 200000;
    cfg.tol = 1e-13;
    const EmResult em = FitRankPmf(samples, catalog, cfg);
    std::vector<oracle::Observation> obs;
    for (const auto& s : samples) {
      obs.push_back({static_cast<int>(s.sampled_rank),
                     static_cast<int>(s.sample_size)});
    }
    const double step = catalog == 4 ? 0.002 : 0.001;
    const auto grid = oracle::SimplexGridMle(obs, catalog, step);
    double diff = 0.0;
    for (int k = 0; k < catalog; ++k) {
      diff = std::max(diff, std::abs(em.pmf.probs[k] - grid.pmf[k]));
    }
    worst = std::max(worst, diff);
    EXPECT_LE(diff, 5e-3) << "instance " << instances << " N=" << catalog;
    ++instances;
  }
  c.Note(std::to_string(instances) + " instances, max L-inf " +
         Fmt("%.3g", worst));
  EXPECT_GE(instances, 10);
}

// Gradients and system matrices rebuilt here from the conditional matrix,
// independent of the solver internals.
struct Stationarity {
  double grad_inf = 0.0;
  double rhs_inf = 0.0;
  double fd_err_at_opt = 0.0;
  double fd_rel_err_away = 0.0;
  int perturbation_violations = 0;
};

template <typename Objective>
Stationarity ProbeOptimum(const Eigen::MatrixXd& system,
                          const Eigen::VectorXd& rhs, const AdjustedMetric& x,
                          Objective&& objective, std::mt19937_64& rng) {
  const Eigen::Index n = rhs.size();
  const Eigen::VectorXd xv =
      Eigen::Map<const Eigen::VectorXd>(x.values.data(), n);
  auto grad = [&](const Eigen::VectorXd& at) {
    return Eigen::VectorXd(2.0 * (system * at - rhs));
  };
  auto eval = [&](const Eigen::VectorXd& at) {
    return objective(AdjustedMetric{std::vector<double>(at.data(),
                                                        at.data() + n)});
  };
  auto finite_diff = [&](const Eigen::VectorXd& at) {
    const double h = 1e-6;
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd up = at;
      Eigen::VectorXd down = at;
      up(i) += h;
      down(i) -= h;
      out(i) = (eval(up) - eval(down)) / (2 * h);
    }
    return out;
  };

  Stationarity s;
  s.rhs_inf = rhs.cwiseAbs().maxCoeff();
  s.grad_inf = grad(xv).cwiseAbs().maxCoeff();
  s.fd_err_at_opt = (finite_diff(xv) - grad(xv)).cwiseAbs().maxCoeff();

  std::normal_distribution<double> z(0.0, 1.0);
  Eigen::VectorXd dir(n);
  for (Eigen::Index i = 0; i < n; ++i) dir(i) = z(rng);
  const Eigen::VectorXd away = xv + 0.1 * dir.normalized();
  const Eigen::VectorXd g_away = grad(away);
  s.fd_rel_err_away = (finite_diff(away) - g_away).cwiseAbs().maxCoeff() /
                      g_away.cwiseAbs().maxCoeff();

  const double base = eval(xv);
  for (int p = 0; p < 100; ++p) {
    for (Eigen::Index i = 0; i < n; ++i) dir(i) = z(rng);
    const double moved = eval(xv + 1e-3 * dir.normalized());
    if (moved < base) ++s.perturbation_violations;
  }
  return s;
}

TEST(Acceptance, Criterion04ClosedFormOptimality) {
  Criterion c(4, "MN and BV closed forms are stationary minimizers", 0.0);
  std::mt19937_64 rng(401);
  double worst_mn_grad = 0.0;
  double worst_bv_grad = 0.0;
  double worst_fd = 0.0;
  int violations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t catalog = 5 + static_cast<std::int64_t>(rng() % 96);
    const std::int64_t n =
        2 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(19, catalog - 1));
    const std::int64_t users = 20 + static_cast<std::int64_t>(rng() % 2000);
    const RankPmf prior = RandomPmf(catalog, rng, 0.05);
    const MetricSpec spec{kFamilies[rng() % 3],
                          1 + static_cast<int>(rng() % catalog)};
    const auto cond = MakeConditionalMatrix(n, catalog);
    const auto problem = MakeLsProblem(prior, cond, spec, users);

    const Eigen::MatrixXd& a = cond.entries();
    const Eigen::VectorXd d =
        Eigen::Map<const Eigen::VectorXd>(prior.probs.data(), catalog);
    const Eigen::VectorXd b =
        Eigen::Map<const Eigen::VectorXd>(problem.target.data(), catalog);
    const Eigen::MatrixXd atda = a.transpose() * d.asDiagonal() * a;
    const Eigen::VectorXd rhs = a.transpose() * d.asDiagonal() * b;

    Eigen::MatrixXd mn_system = atda - a.transpose() * a / double(users);
    mn_system.diagonal() += a.colwise().sum().transpose() / double(users);
    const auto mn = ProbeOptimum(
        mn_system, rhs, SolveMn(problem),
        [&](const AdjustedMetric& x) {
          return EvalObjective(x, problem).total;
        },
        rng);

    const double gamma = trial % 2 == 0
                             ? kDefaultBvGamma
                             : std::generate_canonical<double, 53>(rng);
    Eigen::MatrixXd bv_system = (1.0 - gamma) * atda;
    bv_system.diagonal() += gamma * (a.transpose() * d);
    const auto bv = ProbeOptimum(
        bv_system, rhs, SolveBv(problem, gamma),
        [&](const AdjustedMetric& x) {
          return EvalBvObjective(x, problem, gamma);
        },
        rng);

    for (const auto* s : {&mn, &bv}) {
      const double scale = 1.0 + s->rhs_inf;
      EXPECT_LT(s->grad_inf, 1e-8 * scale) << "trial " << trial;
      EXPECT_LE(s->fd_err_at_opt, 1e-4 * scale) << "trial " << trial;
      EXPECT_LE(s->fd_rel_err_away, 1e-4) << "trial " << trial;
      EXPECT_EQ(s->perturbation_violations, 0) << "trial " << trial;
      worst_fd = std::max(worst_fd, s->fd_rel_err_away);
      violations += s->perturbation_violations;
    }
    worst_mn_grad = std::max(worst_mn_grad, mn.grad_inf / (1 + mn.rhs_inf));
    worst_bv_grad = std::max(worst_bv_grad, bv.grad_inf / (1 + bv.rhs_inf));
  }
  c.Note("max scaled |grad| MN " + Fmt("%.3g", worst_mn_grad) + " BV " +
         Fmt("%.3g", worst_bv_grad) + ", max FD rel err " +
         Fmt("%.3g", worst_fd) + ", perturbation violations " +
         std::to_string(violations));
}

double ChiSquareStatistic(std::int64_t rank, std::int64_t n,
                          std::int64_t catalog, std::int64_t draws,
                          std::uint64_t seed, int& cells) {
  const RankDataset dataset{catalog, std::vector<std::int64_t>(draws, rank)};
  std::vector<double> observed(n, 0.0);
  for (const auto& s : SimulateFixed(dataset, n, seed)) {
    observed[s.sampled_rank - 1] += 1.0;
  }
  // Adjacent cells are pooled until each expects at least 5 draws; a short
  // tail joins the last full cell.
  std::vector<std::pair<double, double>> pooled;  // (observed, expected)
  double obs = 0.0;
  double expected = 0.0;
  for (std::int64_t r = 1; r <= n; ++r) {
    obs += observed[r - 1];
    expected += draws * oracle::ObservationProbability(
                            static_cast<int>(r), static_cast<int>(n),
                            static_cast<int>(rank), static_cast<int>(catalog));
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
  cells = static_cast<int>(pooled.size());
  return stat;
}

TEST(Acceptance, Criterion05SamplingLaw) {
  Criterion c(5, "sampling law: enumeration and chi-square fit", 0.0);
  double worst = 0.0;
  for (int catalog = 2; catalog <= 6; ++catalog) {
    for (int n = 2; n <= 4; ++n) {
      for (int rank = 1; rank <= catalog; ++rank) {
        const auto law = oracle::ExhaustiveSamplingLaw(catalog, n, rank);
        for (int r = 1; r <= n; ++r) {
          worst = std::max(worst, std::abs(law[r - 1] -
                                           RankLikelihood(r, rank, n, catalog)));
        }
      }
    }
  }
  EXPECT_LE(worst, 1e-12);
  c.Note("enumeration max err " + Fmt("%.3g", worst));

  struct Triple {
    std::int64_t rank, n, catalog;
  };
  const Triple triples[] = {
      {50, 10, 100}, {3, 20, 40}, {200, 30, 1000}, {12, 50, 60}, {999, 8, 1000}};
  std::uint64_t seed = 501;
  for (const auto& t : triples) {
    int cells = 0;
    const double stat =
        ChiSquareStatistic(t.rank, t.n, t.catalog, 100000, seed++, cells);
    ASSERT_GE(cells, 2);
    const boost::math::chi_squared dist(cells - 1);
    const double critical = boost::math::quantile(complement(dist, 0.001));
    EXPECT_LT(stat, critical) << "R=" << t.rank << " n=" << t.n
                              << " N=" << t.catalog;
    c.Note("(" + std::to_string(t.rank) + "," + std::to_string(t.n) + "," +
           std::to_string(t.catalog) + ") chi2 " + Fmt("%.1f", stat) + "/" +
           Fmt("%.1f", critical));
  }
}

TEST(Acceptance, Criterion06VarianceIdentity) {
  Criterion c(6, "weighted multinomial variance identity", 30.0);
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> weight(-1.0, 2.0);
  double worst_z = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int cells = 2 + static_cast<int>(rng() % 5);
    std::vector<double> w(cells);
    for (auto& v : w) v = weight(rng);
    const RankPmf theta = RandomPmf(cells, rng, 0.05);
    const int trials = 10 + static_cast<int>(rng() % 51);
    const auto check = oracle::WeightedMultinomialVarianceCheck(
        w, theta.probs, trials, 100000, rng());
    EXPECT_TRUE(check.WithinStandardErrors(4.0))
        << "analytic " << check.analytic << " empirical " << check.empirical
        << " se " << check.standard_error;
    worst_z = std::max(worst_z, std::abs(check.analytic - check.empirical) /
                                    check.standard_error);
  }
  c.Note("max |z| " + Fmt("%.2f", worst_z));
}

ExperimentConfig SyntheticConfig() {
  ExperimentConfig cfg;
  cfg.catalog_size = 2000;
  cfg.user_count = 20000;
  cfg.rank_source = ZipfSource{1.2};
  cfg.repeats = 30;
  cfg.seed = 20260701;
  return cfg;
}

TEST(Acceptance, Criterion07CorrectedBeatNaive) {
  Criterion c(7, "MN(MLE prior) and MLE beat naive on Recall", 300.0);
  ExperimentConfig cfg = SyntheticConfig();
  cfg.sampler = FixedSampler{100, false};
  cfg.estimators =
      ParseEstimatorList("naive,mle,mn:mle", {}, kDefaultBvGamma);
  cfg.metrics = {MetricFamily::kRecall};
  cfg.k_max = 50;
  const ErrorReport report = RunExperiment(cfg);
  const double naive =
      report.Find("naive", MetricFamily::kRecall).avg_rel_err_mean;
  const double mle = report.Find("mle", MetricFamily::kRecall).avg_rel_err_mean;
  const double mn =
      report.Find("mn_mle", MetricFamily::kRecall).avg_rel_err_mean;
  c.Note("naive " + Fmt("%.4f", naive) + ", mle " + Fmt("%.4f", mle) +
         ", mn_mle " + Fmt("%.4f", mn));
  EXPECT_LT(mn, 0.5 * naive);
  EXPECT_LT(mle, 0.5 * naive);
}

TEST(Acceptance, Criterion08AdaptiveBeatsFixedAtSmallK) {
  Criterion c(8, "adaptive MLE beats fixed MLE on NDCG@1..10", 600.0);
  ExperimentConfig adaptive = SyntheticConfig();
  adaptive.sampler = AdaptiveSampler{{100, 3200}};
  adaptive.estimators = ParseEstimatorList("adaptive_mle", {}, kDefaultBvGamma);
  adaptive.metrics = {MetricFamily::kNdcg};
  adaptive.k_max = 10;
  const RankDataset dataset = LoadGroundTruth(adaptive);
  const ErrorReport ad = RunExperiment(adaptive, dataset);

  ExperimentConfig fixed = adaptive;
  const auto n = static_cast<std::int64_t>(std::ceil(ad.mean_sample_size));
  fixed.sampler = FixedSampler{n, false};
  fixed.estimators = ParseEstimatorList("mle", {}, kDefaultBvGamma);
  const ErrorReport fx = RunExperiment(fixed, dataset);

  const double ad_err =
      ad.Find("adaptive_mle", MetricFamily::kNdcg).avg_rel_err_mean;
  const double fx_err = fx.Find("mle", MetricFamily::kNdcg).avg_rel_err_mean;
  c.Note("adaptive " + Fmt("%.4f", ad_err) + " vs fixed(n=" +
         std::to_string(n) + ") " + Fmt("%.4f", fx_err) +
         ", adaptive mean size " + Fmt("%.1f", ad.mean_sample_size) +
         " (limit 800)");
  EXPECT_LT(ad_err, fx_err);
  EXPECT_LT(ad.mean_sample_size, 3200.0 / 4.0);
}

TEST(Acceptance, Criterion09UserCountDependence) {
  Criterion c(9, "MN depends on M, BV does not", 0.0);
  std::mt19937_64 rng(901);
  const RankPmf prior = RandomPmf(60, rng, 0.01);
  const auto cond = MakeConditionalMatrix(9, 60);
  const MetricSpec spec{MetricFamily::kNdcg, 5};
  const auto small = MakeLsProblem(prior, cond, spec, 1000);
  const auto large = MakeLsProblem(prior, cond, spec, 1000000);
  const auto mn_small = SolveMn(small);
  const auto mn_large = SolveMn(large);
  double diff = 0.0;
  for (std::size_t r = 0; r < mn_small.values.size(); ++r) {
    diff = std::max(diff, std::abs(mn_small.values[r] - mn_large.values[r]));
  }
  const bool bv_same = SolveBv(small, kDefaultBvGamma).values ==
                       SolveBv(large, kDefaultBvGamma).values;
  c.Note("MN L-inf change " + Fmt("%.3g", diff) + ", BV bit-identical " +
         (bv_same ? "yes" : "no"));
  EXPECT_GT(diff, 1e-6);
  EXPECT_TRUE(bv_same);
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Acceptance, Criterion10Determinism) {
  Criterion c(10, "serial and parallel runs write identical reports", 0.0);
  ExperimentConfig cfg;
  cfg.catalog_size = 500;
  cfg.user_count = 4000;
  cfg.rank_source = ZipfSource{1.2};
  cfg.sampler = FixedSampler{50, false};
  cfg.estimators = ParseEstimatorList("naive,mle,mn:mle,mn:uniform,bv:uniform",
                                      {}, kDefaultBvGamma);
  cfg.metrics = {MetricFamily::kRecall, MetricFamily::kNdcg, MetricFamily::kAp};
  cfg.k_max = 20;
  cfg.repeats = 8;
  cfg.seed = 1001;
  const auto root =
      std::filesystem::temp_directory_path() / "sampest_acceptance_det";
  std::filesystem::remove_all(root);
  cfg.threads = 1;
  WriteReport(RunExperiment(cfg), cfg, (root / "serial").string());
  cfg.threads = 4;
  WriteReport(RunExperiment(cfg), cfg, (root / "parallel").string());
  for (const char* file : {"report.csv", "summary.json"}) {
    const std::string serial = Slurp(root / "serial" / file);
    EXPECT_FALSE(serial.empty()) << file;
    EXPECT_EQ(serial, Slurp(root / "parallel" / file)) << file;
    c.Note(std::string(file) + " " + std::to_string(serial.size()) + " bytes");
  }
  std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace sampest

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
