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

// Command-line front end: synth, sample, estimate, evaluate, efficiency,
// compare and verify.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sampest/core.h"
#include "sampest/em.h"
#include "sampest/experiment.h"
#include "sampest/io.h"
#include "sampest/sampling.h"
#include "sampest/verify.h"

namespace sampest {
namespace {

struct Options {
  std::int64_t catalog_size = 0;
  std::int64_t user_count = 0;
  double zipf = 1.2;
  std::string ranks_path;
  std::string samples_path;
  std::string pmf_path;
  std::string mode = "fixed";
  std::int64_t n = kDefaultInitialSize;
  std::int64_t n0 = kDefaultInitialSize;
  std::int64_t nmax = kDefaultTerminalSize;
  bool exact = false;
  double gamma = kDefaultBvGamma;
  std::string prior = "mle";
  std::string metric = "recall";
  int k_max = kDefaultKMax;
  int repeats = kDefaultRepeats;
  std::uint64_t seed = 0;
  std::string estimators = "naive,mle,mn,bv";
  std::string out;
  std::string fit_pmf_path;
  int threads = 1;
  int em_max_iters = EmConfig{}.max_iters;
  double em_tol = EmConfig{}.tol;
};

void AddEmFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--em-max-iters", o.em_max_iters, "EM iteration cap")
      ->capture_default_str();
  cmd->add_option("--em-tol", o.em_tol, "EM L-inf stopping tolerance")
      ->capture_default_str();
}

void AddEstimatorFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--estimators", o.estimators,
                  "naive,mle,adaptive_mle,mn[:PRIOR],bv[:PRIOR]")
      ->capture_default_str();
  cmd->add_option("--prior", o.prior, "uniform | mle | file:PATH")
      ->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "BV trade-off in [0, 1]")
      ->capture_default_str();
  cmd->add_option("--metric", o.metric, "recall | ndcg | ap (comma list)")
      ->capture_default_str();
  cmd->add_option("--k-max", o.k_max, "largest cutoff K")
      ->capture_default_str();
  AddEmFlags(cmd, o);
}

EmConfig MakeEmConfig(const Options& o) {
  EmConfig em;
  em.max_iters = o.em_max_iters;
  em.tol = o.em_tol;
  em.Validate();
  return em;
}

std::vector<EstimatorSpec> MakeEstimators(const Options& o) {
  return ParseEstimatorList(o.estimators, PriorSpec::Parse(o.prior), o.gamma);
}

// Opens `path` for writing, or returns stdout when it is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void RunSynth(const Options& o) {
  const RankDataset dataset =
      o.pmf_path.empty()
          ? SynthZipfRanks(o.catalog_size, o.user_count, o.zipf, o.seed)
          : SynthRanksFromPmf(ReadPmf(o.pmf_path), o.user_count, o.seed);
  Output out(o.out);
  WriteRanks(dataset, out.stream());
}

void RunSample(const Options& o) {
  const RankDataset dataset = ReadRanks(o.ranks_path, o.catalog_size);
  std::vector<SampleRecord> samples;
  if (o.mode == "fixed") {
    samples = o.exact ? SimulateExact(dataset)
                      : SimulateFixed(dataset, o.n, o.seed);
  } else {
    samples = SimulateAdaptive(dataset, {o.n0, o.nmax}, o.seed);
  }
  Output out(o.out);
  WriteSamples(samples, out.stream());
}

// Prints estimator,metric,K,estimate for every configured estimator.
void RunEstimate(const Options& o) {
  const auto samples = ReadSamples(o.samples_path);
  const auto estimators = MakeEstimators(o);
  const auto metrics = ParseMetricList(o.metric);
  const EmConfig em = MakeEmConfig(o);
  const auto curves = EstimateCurves(samples, o.catalog_size, estimators,
                                     metrics, o.k_max, em, o.exact);
  std::string path;
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    path = (std::filesystem::path(o.out) / "estimates.csv").string();
  }
  Output out(path);
  out.stream() << "estimator,metric,K,estimate\n";
  for (std::size_t e = 0; e < estimators.size(); ++e) {
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      for (int k = 1; k <= o.k_max; ++k) {
        out.stream() << estimators[e].Name() << ','
                     << MetricFamilyName(metrics[m]) << ',' << k << ','
                     << FormatDouble(curves[e][m][k - 1]) << '\n';
      }
    }
  }
  if (!o.fit_pmf_path.empty()) {
    WritePmf(FitRankPmf(samples, o.catalog_size, em).pmf, o.fit_pmf_path);
  }
}

// Ground-truth curves, optionally scored against estimates from samples.
void RunEvaluate(const Options& o) {
  const RankDataset dataset = ReadRanks(o.ranks_path, o.catalog_size);
  const auto metrics = ParseMetricList(o.metric);
  Output out(o.out);
  std::ostream& os = out.stream();
  if (o.samples_path.empty()) {
    os << "metric,K,true\n";
    for (const auto family : metrics) {
      for (int k = 1; k <= o.k_max; ++k) {
        os << MetricFamilyName(family) << ',' << k << ','
           << FormatDouble(GlobalMetric(dataset, {family, k})) << '\n';
      }
    }
    return;
  }
  const auto samples = ReadSamples(o.samples_path);
  const auto estimators = MakeEstimators(o);
  const auto curves =
      EstimateCurves(samples, o.catalog_size, estimators, metrics, o.k_max,
                     MakeEmConfig(o), o.exact);
  os << "estimator,metric,K,true,estimate,rel_err\n";
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    std::vector<double> truth;
    for (int k = 1; k <= o.k_max; ++k) {
      truth.push_back(GlobalMetric(dataset, {metrics[m], k}));
    }
    for (std::size_t e = 0; e < estimators.size(); ++e) {
      const RelativeError rel = RelativeErrorCurve(truth, curves[e][m]);
      for (int k = 1; k <= o.k_max; ++k) {
        const double r = rel.per_k[k - 1];
        os << estimators[e].Name() << ',' << MetricFamilyName(metrics[m])
           << ',' << k << ',' << FormatDouble(truth[k - 1]) << ','
           << FormatDouble(curves[e][m][k - 1]) << ','
           << (std::isnan(r) ? "" : FormatDouble(r)) << '\n';
      }
      std::cerr << estimators[e].Name() << ' '
                << MetricFamilyName(metrics[m])
                << " avg_rel_err=" << FormatDouble(rel.average)
                << " skipped_k=" << rel.skipped << '\n';
    }
  }
}

void RunEfficiency(const Options& o) {
  const auto samples = ReadSamples(o.samples_path);
  const AdaptiveConfig cfg{o.n0, o.nmax};
  const EfficiencyReport report = AnalyzeEfficiency(
      samples, cfg, static_cast<std::int64_t>(samples.size()));
  Output out(o.out);
  out.stream() << "size,count,cost\n";
  for (std::size_t j = 0; j < report.sizes.size(); ++j) {
    out.stream() << report.sizes[j] << ',' << report.counts[j] << ','
                 << (report.costs[j] ? FormatDouble(*report.costs[j]) : "")
                 << '\n';
  }
}

void RunCompare(const Options& o) {
  ExperimentConfig cfg;
  cfg.catalog_size = o.catalog_size;
  cfg.user_count = o.user_count;
  if (!o.ranks_path.empty()) {
    cfg.rank_source = RanksFileSource{o.ranks_path};
  } else if (!o.pmf_path.empty()) {
    cfg.rank_source = PmfFileSource{o.pmf_path};
  } else {
    cfg.rank_source = ZipfSource{o.zipf};
  }
  if (o.mode == "fixed") {
    cfg.sampler = FixedSampler{o.n, o.exact};
  } else {
    cfg.sampler = AdaptiveSampler{{o.n0, o.nmax}};
  }
  cfg.estimators = MakeEstimators(o);
  cfg.metrics = ParseMetricList(o.metric);
  cfg.k_max = o.k_max;
  cfg.repeats = o.repeats;
  cfg.seed = o.seed;
  cfg.em = MakeEmConfig(o);
  cfg.threads = o.threads;
  const ErrorReport report = RunExperiment(cfg);
  WriteReport(report, cfg, o.out);
  std::cout << "mean sample size " << FormatDouble(report.mean_sample_size)
            << '\n';
  for (const auto& r : report.results) {
    std::cout << r.estimator << ' ' << MetricFamilyName(r.metric)
              << " avg_rel_err " << FormatDouble(r.avg_rel_err_mean) << " +- "
              << FormatDouble(r.avg_rel_err_std) << '\n';
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Sampled top-K metric estimation toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* synth = app.add_subcommand("synth", "synthesize a ranks file");
  synth->add_option("--N", o.catalog_size, "catalog size")->required();
  synth->add_option("--M", o.user_count, "number of users")->required();
  synth->add_option("--zipf", o.zipf, "Zipf exponent s")
      ->capture_default_str();
  synth->add_option("--pmf", o.pmf_path, "draw from a rank pmf file");
  synth->add_option("--seed", o.seed)->capture_default_str();
  synth->add_option("--out", o.out, "output ranks file (default stdout)");

  auto* sample = app.add_subcommand("sample", "simulate item sampling");
  sample->add_option("mode", o.mode, "fixed | adaptive")
      ->required()
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  sample->add_option("--ranks", o.ranks_path)->required();
  sample->add_option("--N", o.catalog_size)->required();
  sample->add_option("--n", o.n, "fixed sample size")->capture_default_str();
  sample->add_flag("--exact", o.exact, "use the whole catalog (n = N)");
  sample->add_option("--n0", o.n0)->capture_default_str();
  sample->add_option("--nmax", o.nmax)->capture_default_str();
  sample->add_option("--seed", o.seed)->capture_default_str();
  sample->add_option("--out", o.out, "output samples file (default stdout)");

  auto* estimate =
      app.add_subcommand("estimate", "estimate global metrics from samples");
  estimate->add_option("--samples", o.samples_path)->required();
  estimate->add_option("--N", o.catalog_size)->required();
  estimate->add_flag("--exact", o.exact, "samples cover the whole catalog");
  estimate->add_option("--fit-pmf", o.fit_pmf_path,
                       "also write the EM rank pmf here");
  estimate->add_option("--out", o.out, "directory for estimates.csv");
  AddEstimatorFlags(estimate, o);

  auto* evaluate =
      app.add_subcommand("evaluate", "ground-truth curves and errors");
  evaluate->add_option("--ranks", o.ranks_path)->required();
  evaluate->add_option("--N", o.catalog_size)->required();
  evaluate->add_option("--samples", o.samples_path,
                       "score estimators on these samples");
  evaluate->add_flag("--exact", o.exact, "samples cover the whole catalog");
  evaluate->add_option("--out", o.out, "output CSV (default stdout)");
  AddEstimatorFlags(evaluate, o);

  auto* efficiency =
      app.add_subcommand("efficiency", "per-level adaptive sampling cost");
  efficiency->add_option("--samples", o.samples_path)->required();
  efficiency->add_option("--n0", o.n0)->capture_default_str();
  efficiency->add_option("--nmax", o.nmax)->capture_default_str();
  efficiency->add_option("--out", o.out, "output CSV (default stdout)");

  auto* compare =
      app.add_subcommand("compare", "Monte Carlo estimator benchmark");
  compare->add_option("--N", o.catalog_size)->required();
  compare->add_option("--M", o.user_count, "users (synthetic sources)");
  compare->add_option("--zipf", o.zipf)->capture_default_str();
  compare->add_option("--ranks", o.ranks_path, "ground-truth ranks file");
  compare->add_option("--pmf", o.pmf_path, "ground-truth rank pmf file");
  compare->add_option("--sampler", o.mode, "fixed | adaptive")
      ->capture_default_str()
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  compare->add_option("--n", o.n)->capture_default_str();
  compare->add_flag("--exact", o.exact, "fixed sampler with n = N");
  compare->add_option("--n0", o.n0)->capture_default_str();
  compare->add_option("--nmax", o.nmax)->capture_default_str();
  compare->add_option("--repeats", o.repeats)->capture_default_str();
  compare->add_option("--seed", o.seed)->capture_default_str();
  compare->add_option("--threads", o.threads)->capture_default_str();
  compare->add_option("--out", o.out, "report directory")->required();
  AddEstimatorFlags(compare, o);

  auto* verify = app.add_subcommand("verify", "run the oracle checks");
  verify->add_option("--seed", o.seed, "Monte Carlo seed")
      ->default_val(7);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) RunSynth(o);
    if (*sample) RunSample(o);
    if (*estimate) RunEstimate(o);
    if (*evaluate) RunEvaluate(o);
    if (*efficiency) RunEfficiency(o);
    if (*compare) RunCompare(o);
    if (*verify) return RunVerification(std::cout, o.seed) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace sampest

int main(int argc, char** argv) { return sampest::Main(argc, argv); }
