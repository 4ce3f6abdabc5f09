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

#include "sampest/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "sampest/io.h"
#include "sampest/rank_model.h"

namespace sampest {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Estimates for one repeat, indexed [estimator][metric][K - 1].
struct RepeatOutput {
  double mean_sample_size = 0.0;
  std::vector<std::vector<std::vector<double>>> estimates;
};

bool NeedsEqualSizes(const EstimatorSpec& e) {
  return e.kind == EstimatorKind::kMle || e.kind == EstimatorKind::kMn ||
         e.kind == EstimatorKind::kBv;
}

bool NeedsEmFit(const EstimatorSpec& e) {
  if (e.kind == EstimatorKind::kMle || e.kind == EstimatorKind::kAdaptiveMle) {
    return true;
  }
  return (e.kind == EstimatorKind::kMn || e.kind == EstimatorKind::kBv) &&
         e.prior.kind == PriorKind::kMle;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitList(std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const auto item = Trim(text.substr(start, comma - start));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

double SampleStd(std::span<const double> values, double mean) {
  if (values.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double Mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? kNaN : sum / static_cast<double>(values.size());
}

// Shared, read-only state for all repeats.
struct RunContext {
  const ExperimentConfig* config = nullptr;
  const RankDataset* dataset = nullptr;
};

std::vector<SampleRecord> DrawSamples(const RunContext& ctx,
                                      std::uint64_t seed) {
  const auto& sampler = ctx.config->sampler;
  if (const auto* fixed = std::get_if<FixedSampler>(&sampler)) {
    if (fixed->exact) return SimulateExact(*ctx.dataset);
    return SimulateFixed(*ctx.dataset, fixed->size, seed);
  }
  return SimulateAdaptive(*ctx.dataset,
                          std::get<AdaptiveSampler>(sampler).config, seed);
}

RepeatOutput RunRepeat(const RunContext& ctx, int repeat) {
  const ExperimentConfig& config = *ctx.config;
  const std::vector<SampleRecord> samples = DrawSamples(
      ctx, DeriveSeed(config.seed, static_cast<std::uint64_t>(repeat) + 1));
  const auto* fixed = std::get_if<FixedSampler>(&config.sampler);
  RepeatOutput out;
  out.mean_sample_size = MeanSampleSize(samples);
  out.estimates = EstimateCurves(samples, ctx.dataset->catalog_size,
                                 config.estimators, config.metrics,
                                 config.k_max, config.em,
                                 fixed != nullptr && fixed->exact);
  return out;
}

std::vector<RepeatOutput> RunRepeats(const RunContext& ctx) {
  const int repeats = ctx.config->repeats;
  std::vector<RepeatOutput> outputs(static_cast<std::size_t>(repeats));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(repeats));
  const int workers = std::min(ctx.config->threads, repeats);
  if (workers <= 1) {
    for (int r = 0; r < repeats; ++r) outputs[r] = RunRepeat(ctx, r);
    return outputs;
  }
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int r = next++; r < repeats; r = next++) {
      try {
        outputs[r] = RunRepeat(ctx, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return outputs;
}

nlohmann::json ResolvedConfig(const ExperimentConfig& config,
                              const ErrorReport& report) {
  nlohmann::json j;
  j["catalog_size"] = report.catalog_size;
  j["user_count"] = report.user_count;
  std::visit(
      [&](const auto& source) {
        using T = std::decay_t<decltype(source)>;
        if constexpr (std::is_same_v<T, ZipfSource>) {
          j["rank_source"] = {{"type", "zipf"}, {"exponent", source.exponent}};
        } else if constexpr (std::is_same_v<T, RanksFileSource>) {
          j["rank_source"] = {{"type", "ranks_file"}, {"path", source.path}};
        } else {
          j["rank_source"] = {{"type", "pmf_file"}, {"path", source.path}};
        }
      },
      config.rank_source);
  if (const auto* fixed = std::get_if<FixedSampler>(&config.sampler)) {
    j["sampler"] = {
        {"type", "fixed"}, {"n", fixed->size}, {"exact", fixed->exact}};
  } else {
    const auto& adaptive = std::get<AdaptiveSampler>(config.sampler).config;
    j["sampler"] = {{"type", "adaptive"},
                    {"n0", adaptive.initial_size},
                    {"nmax", adaptive.terminal_size}};
  }
  nlohmann::json estimators = nlohmann::json::array();
  for (const auto& e : config.estimators) {
    nlohmann::json item = {{"name", e.Name()}};
    if (e.kind == EstimatorKind::kMn || e.kind == EstimatorKind::kBv) {
      item["prior"] = e.prior.Name();
    }
    if (e.kind == EstimatorKind::kBv) item["gamma"] = e.gamma;
    estimators.push_back(item);
  }
  j["estimators"] = estimators;
  nlohmann::json metrics = nlohmann::json::array();
  for (auto m : config.metrics) metrics.push_back(MetricFamilyName(m));
  j["metrics"] = metrics;
  j["k_max"] = config.k_max;
  j["repeats"] = config.repeats;
  j["seed"] = config.seed;
  j["em"] = {{"max_iters", config.em.max_iters}, {"tol", config.em.tol}};
  return j;
}

}  // namespace

PriorSpec PriorSpec::Parse(std::string_view text) {
  if (text == "uniform") return {PriorKind::kUniform, ""};
  if (text == "mle") return {PriorKind::kMle, ""};
  if (text.starts_with("file:") && text.size() > 5) {
    return {PriorKind::kFile, std::string(text.substr(5))};
  }
  throw std::invalid_argument("unknown prior '" + std::string(text) +
                              "' (expected uniform, mle or file:PATH)");
}

std::string PriorSpec::Name() const {
  switch (kind) {
    case PriorKind::kUniform:
      return "uniform";
    case PriorKind::kMle:
      return "mle";
    case PriorKind::kFile:
      return "file:" + path;
  }
  return "unknown";
}

EstimatorSpec EstimatorSpec::Parse(std::string_view text,
                                   const PriorSpec& default_prior,
                                   double gamma) {
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const bool has_prior = colon != std::string_view::npos;
  EstimatorSpec spec;
  spec.gamma = gamma;
  if (head == "mn" || head == "bv") {
    spec.kind = head == "mn" ? EstimatorKind::kMn : EstimatorKind::kBv;
    spec.prior =
        has_prior ? PriorSpec::Parse(text.substr(colon + 1)) : default_prior;
    return spec;
  }
  if (!has_prior) {
    if (head == "naive") return {EstimatorKind::kNaive, {}, gamma};
    if (head == "mle") return {EstimatorKind::kMle, {}, gamma};
    if (head == "adaptive_mle") return {EstimatorKind::kAdaptiveMle, {}, gamma};
  }
  throw std::invalid_argument(
      "unknown estimator '" + std::string(text) +
      "' (expected naive, mle, adaptive_mle, mn[:PRIOR] or bv[:PRIOR])");
}

std::string EstimatorSpec::Name() const {
  switch (kind) {
    case EstimatorKind::kNaive:
      return "naive";
    case EstimatorKind::kMle:
      return "mle";
    case EstimatorKind::kAdaptiveMle:
      return "adaptive_mle";
    case EstimatorKind::kMn:
      return "mn_" + prior.Name();
    case EstimatorKind::kBv:
      return "bv_" + prior.Name();
  }
  return "unknown";
}

std::vector<EstimatorSpec> ParseEstimatorList(std::string_view text,
                                              const PriorSpec& default_prior,
                                              double gamma) {
  std::vector<EstimatorSpec> out;
  for (auto item : SplitList(text)) {
    out.push_back(EstimatorSpec::Parse(item, default_prior, gamma));
  }
  if (out.empty()) throw std::invalid_argument("empty estimator list");
  return out;
}

std::vector<MetricFamily> ParseMetricList(std::string_view text) {
  std::vector<MetricFamily> out;
  for (auto item : SplitList(text)) out.push_back(ParseMetricFamily(item));
  if (out.empty()) throw std::invalid_argument("empty metric list");
  return out;
}

void ExperimentConfig::Validate() const {
  if (catalog_size < 2) {
    throw std::invalid_argument("catalog size N must be >= 2");
  }
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (k_max < 1 || k_max > catalog_size) {
    throw std::invalid_argument("k_max must lie in [1, N]");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (estimators.empty()) {
    throw std::invalid_argument("no estimators configured");
  }
  if (metrics.empty()) throw std::invalid_argument("no metrics configured");
  em.Validate();
  if (const auto* zipf = std::get_if<ZipfSource>(&rank_source)) {
    if (!(zipf->exponent > 0.0)) {
      throw std::invalid_argument("Zipf exponent must be > 0");
    }
  }
  if (!std::holds_alternative<RanksFileSource>(rank_source) &&
      user_count < 1) {
    throw std::invalid_argument("user count M must be >= 1");
  }
  std::set<std::string> names;
  for (const auto& e : estimators) {
    if (!names.insert(e.Name()).second) {
      throw std::invalid_argument("estimator '" + e.Name() +
                                  "' listed twice");
    }
    if (e.kind == EstimatorKind::kBv && !(e.gamma >= 0.0 && e.gamma <= 1.0)) {
      throw std::invalid_argument("BV gamma must lie in [0, 1]");
    }
  }
  if (const auto* adaptive = std::get_if<AdaptiveSampler>(&sampler)) {
    adaptive->config.Validate();
    for (const auto& e : estimators) {
      if (NeedsEqualSizes(e)) {
        throw std::invalid_argument(
            "estimator '" + e.Name() +
            "' requires one shared sample size and cannot run on the "
            "adaptive sampler (use adaptive_mle)");
      }
    }
  } else {
    const auto& fixed = std::get<FixedSampler>(sampler);
    if (fixed.size < 2) throw std::invalid_argument("sample size must be >= 2");
    if (fixed.exact && fixed.size != catalog_size) {
      throw std::invalid_argument("exact sampling requires n == N");
    }
    for (const auto& e : estimators) {
      if ((e.kind == EstimatorKind::kMn || e.kind == EstimatorKind::kBv) &&
          fixed.size > catalog_size) {
        throw std::invalid_argument("estimator '" + e.Name() +
                                    "' needs sample size n <= N");
      }
    }
  }
}

RankPmf ZipfPmf(std::int64_t catalog_size, double exponent) {
  if (catalog_size < 1 || !(exponent > 0.0)) {
    throw std::invalid_argument("Zipf pmf needs N >= 1 and exponent > 0");
  }
  RankPmf pmf;
  pmf.probs.resize(static_cast<std::size_t>(catalog_size));
  double total = 0.0;
  for (std::int64_t rank = 1; rank <= catalog_size; ++rank) {
    pmf.probs[rank - 1] = std::pow(static_cast<double>(rank), -exponent);
    total += pmf.probs[rank - 1];
  }
  for (double& p : pmf.probs) p /= total;
  return pmf;
}

RankDataset SynthRanksFromPmf(const RankPmf& pmf, std::int64_t user_count,
                              std::uint64_t seed) {
  pmf.Validate();
  if (user_count < 1) throw std::invalid_argument("user count must be >= 1");
  std::vector<double> cdf(pmf.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    acc += pmf.probs[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, acc);
  RankDataset dataset;
  dataset.catalog_size = pmf.size();
  dataset.ranks.resize(static_cast<std::size_t>(user_count));
  for (auto& rank : dataset.ranks) {
    const double u = unit(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    rank = std::min<std::int64_t>(it - cdf.begin() + 1, pmf.size());
  }
  return dataset;
}

RankDataset SynthZipfRanks(std::int64_t catalog_size, std::int64_t user_count,
                           double exponent, std::uint64_t seed) {
  return SynthRanksFromPmf(ZipfPmf(catalog_size, exponent), user_count, seed);
}

RelativeError RelativeErrorCurve(std::span<const double> truth,
                                 std::span<const double> estimate) {
  if (truth.size() != estimate.size()) {
    throw std::invalid_argument("truth and estimate curves differ in length");
  }
  RelativeError out;
  out.per_k.resize(truth.size(), kNaN);
  double sum = 0.0;
  int used = 0;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    if (truth[k] == 0.0) {
      ++out.skipped;
      continue;
    }
    out.per_k[k] = std::abs(estimate[k] - truth[k]) / truth[k];
    sum += out.per_k[k];
    ++used;
  }
  out.average = used > 0 ? sum / used : kNaN;
  return out;
}

int WinnerAccuracy(std::span<const double> truth,
                   const std::vector<std::vector<double>>& estimates) {
  if (truth.size() < 2) {
    throw std::invalid_argument("winner prediction needs at least two models");
  }
  auto argmax = [](std::span<const double> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] > v[best]) best = i;
    }
    return best;
  };
  const std::size_t true_winner = argmax(truth);
  int matches = 0;
  for (const auto& row : estimates) {
    if (row.size() != truth.size()) {
      throw std::invalid_argument("estimate row has the wrong model count");
    }
    if (argmax(row) == true_winner) ++matches;
  }
  return matches;
}

const EstimatorResult& ErrorReport::Find(std::string_view estimator,
                                         MetricFamily metric) const {
  for (const auto& r : results) {
    if (r.estimator == estimator && r.metric == metric) return r;
  }
  throw std::out_of_range("no result for estimator '" +
                          std::string(estimator) + "' and metric '" +
                          std::string(MetricFamilyName(metric)) + "'");
}

std::vector<std::vector<std::vector<double>>> EstimateCurves(
    std::span<const SampleRecord> samples, std::int64_t catalog_size,
    const std::vector<EstimatorSpec>& estimators,
    const std::vector<MetricFamily>& metrics, int k_max,
    const EmConfig& em_config, bool exact_mode) {
  if (samples.empty()) {
    throw std::invalid_argument("estimation needs at least one sample");
  }
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const bool equal_sizes = std::all_of(
      samples.begin(), samples.end(), [&](const SampleRecord& s) {
        return s.sample_size == samples.front().sample_size;
      });
  for (const auto& e : estimators) {
    if (NeedsEqualSizes(e) && !equal_sizes) {
      throw std::invalid_argument(
          "estimator '" + e.Name() +
          "' requires one shared sample size but the samples mix sizes "
          "(use adaptive_mle)");
    }
  }

  std::optional<RankPmf> fitted;
  if (std::any_of(estimators.begin(), estimators.end(), NeedsEmFit)) {
    fitted = FitRankPmf(samples, catalog_size, em_config).pmf;
  }
  const bool needs_ls =
      std::any_of(estimators.begin(), estimators.end(), [](const auto& e) {
        return e.kind == EstimatorKind::kMn || e.kind == EstimatorKind::kBv;
      });
  std::unique_ptr<ConditionalMatrix> cond;
  std::optional<SampledPmf> sampled;
  if (needs_ls) {
    const std::int64_t n = samples.front().sample_size;
    cond = std::make_unique<ConditionalMatrix>(
        MakeConditionalMatrix(n, catalog_size, exact_mode));
    sampled = EmpiricalSampledPmf(samples, n);
  }

  auto resolve_prior = [&](const PriorSpec& prior) -> RankPmf {
    switch (prior.kind) {
      case PriorKind::kUniform:
        return RankPmf::Uniform(catalog_size);
      case PriorKind::kMle:
        return *fitted;
      case PriorKind::kFile: {
        RankPmf pmf = ReadPmf(prior.path);
        if (pmf.size() != catalog_size) {
          throw std::invalid_argument("prior file '" + prior.path +
                                      "' length differs from N");
        }
        return pmf;
      }
    }
    return RankPmf::Uniform(catalog_size);
  };

  const auto users = static_cast<std::int64_t>(samples.size());
  std::vector<std::vector<std::vector<double>>> out;
  for (const auto& estimator : estimators) {
    std::unique_ptr<MnSolver> mn;
    std::unique_ptr<BvSolver> bv;
    if (estimator.kind == EstimatorKind::kMn) {
      mn = std::make_unique<MnSolver>(resolve_prior(estimator.prior), *cond,
                                      users);
    } else if (estimator.kind == EstimatorKind::kBv) {
      bv = std::make_unique<BvSolver>(resolve_prior(estimator.prior), *cond,
                                      estimator.gamma);
    }
    std::vector<std::vector<double>> per_metric;
    for (const auto family : metrics) {
      std::vector<double> curve(static_cast<std::size_t>(k_max));
      for (int k = 1; k <= k_max; ++k) {
        const MetricSpec spec{family, k};
        switch (estimator.kind) {
          case EstimatorKind::kNaive:
            curve[k - 1] = NaiveSampledMetric(samples, spec);
            break;
          case EstimatorKind::kMle:
          case EstimatorKind::kAdaptiveMle:
            curve[k - 1] = PluginMetricFromPmf(*fitted, spec);
            break;
          case EstimatorKind::kMn:
          case EstimatorKind::kBv: {
            const auto target = TruncatedMetricVector(spec, catalog_size);
            const AdjustedMetric x =
                mn ? mn->Solve(target) : bv->Solve(target);
            curve[k - 1] = ApplyAdjustedMetric(x, *sampled);
            break;
          }
        }
      }
      per_metric.push_back(std::move(curve));
    }
    out.push_back(std::move(per_metric));
  }
  return out;
}

RankDataset LoadGroundTruth(const ExperimentConfig& config) {
  const std::uint64_t seed = DeriveSeed(config.seed, 0);
  return std::visit(
      [&](const auto& source) -> RankDataset {
        using T = std::decay_t<decltype(source)>;
        if constexpr (std::is_same_v<T, ZipfSource>) {
          return SynthZipfRanks(config.catalog_size, config.user_count,
                                source.exponent, seed);
        } else if constexpr (std::is_same_v<T, RanksFileSource>) {
          return ReadRanks(source.path, config.catalog_size);
        } else {
          const RankPmf pmf = ReadPmf(source.path);
          if (pmf.size() != config.catalog_size) {
            throw std::invalid_argument("rank pmf file length differs from N");
          }
          return SynthRanksFromPmf(pmf, config.user_count, seed);
        }
      },
      config.rank_source);
}

ErrorReport RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  return RunExperiment(config, LoadGroundTruth(config));
}

ErrorReport RunExperiment(const ExperimentConfig& config,
                          const RankDataset& dataset) {
  config.Validate();
  dataset.Validate();
  if (dataset.catalog_size != config.catalog_size) {
    throw std::invalid_argument("dataset catalog size differs from config N");
  }

  RunContext ctx;
  ctx.config = &config;
  ctx.dataset = &dataset;
  const std::int64_t n_items = dataset.catalog_size;

  const std::vector<RepeatOutput> outputs = RunRepeats(ctx);

  ErrorReport report;
  report.catalog_size = n_items;
  report.user_count = dataset.user_count();
  std::vector<double> sizes;
  for (const auto& o : outputs) sizes.push_back(o.mean_sample_size);
  report.mean_sample_size = Mean(sizes);

  const auto repeats = static_cast<std::size_t>(config.repeats);
  for (std::size_t e = 0; e < config.estimators.size(); ++e) {
    for (std::size_t m = 0; m < config.metrics.size(); ++m) {
      std::vector<double> truth(static_cast<std::size_t>(config.k_max));
      for (int k = 1; k <= config.k_max; ++k) {
        truth[k - 1] = GlobalMetric(dataset, {config.metrics[m], k});
      }
      EstimatorResult result;
      result.estimator = config.estimators[e].Name();
      result.metric = config.metrics[m];
      std::vector<std::vector<double>> rel_by_k(truth.size());
      for (std::size_t r = 0; r < repeats; ++r) {
        const auto& est = outputs[r].estimates[e][m];
        result.estimates.push_back(est);
        const RelativeError rel = RelativeErrorCurve(truth, est);
        result.avg_rel_err_by_repeat.push_back(rel.average);
        result.skipped_k = rel.skipped;
        for (std::size_t k = 0; k < truth.size(); ++k) {
          rel_by_k[k].push_back(rel.per_k[k]);
        }
      }
      result.avg_rel_err_mean = Mean(result.avg_rel_err_by_repeat);
      result.avg_rel_err_std =
          SampleStd(result.avg_rel_err_by_repeat, result.avg_rel_err_mean);
      for (std::size_t k = 0; k < truth.size(); ++k) {
        std::vector<double> column;
        for (std::size_t r = 0; r < repeats; ++r) {
          column.push_back(result.estimates[r][k]);
        }
        CurvePoint point;
        point.k = static_cast<int>(k) + 1;
        point.truth = truth[k];
        point.estimate_mean = Mean(column);
        point.estimate_std = SampleStd(column, point.estimate_mean);
        point.rel_err_mean = truth[k] == 0.0 ? kNaN : Mean(rel_by_k[k]);
        result.curve.push_back(point);
      }
      report.results.push_back(std::move(result));
    }
  }
  return report;
}

void WriteReportCsv(const ErrorReport& report, std::ostream& out) {
  out << "estimator,metric,K,true,estimate_mean,estimate_std,rel_err_mean\n";
  for (const auto& result : report.results) {
    for (const auto& p : result.curve) {
      out << result.estimator << ',' << MetricFamilyName(result.metric) << ','
          << p.k << ',' << FormatDouble(p.truth) << ','
          << FormatDouble(p.estimate_mean) << ','
          << FormatDouble(p.estimate_std) << ','
          << (std::isnan(p.rel_err_mean) ? "" : FormatDouble(p.rel_err_mean))
          << '\n';
    }
  }
}

void WriteSummaryJson(const ErrorReport& report,
                      const ExperimentConfig& config, std::ostream& out) {
  nlohmann::json j;
  j["config"] = ResolvedConfig(config, report);
  j["mean_sample_size"] = report.mean_sample_size;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    results.push_back({{"estimator", r.estimator},
                       {"metric", MetricFamilyName(r.metric)},
                       {"avg_rel_err_mean", r.avg_rel_err_mean},
                       {"avg_rel_err_std", r.avg_rel_err_std},
                       {"skipped_k", r.skipped_k},
                       {"avg_rel_err_by_repeat", r.avg_rel_err_by_repeat}});
  }
  j["results"] = results;
  out << j.dump(2) << '\n';
}

void WriteReport(const ErrorReport& report, const ExperimentConfig& config,
                 const std::string& directory) {
  std::filesystem::create_directories(directory);
  const std::filesystem::path dir(directory);
  std::ofstream csv(dir / "report.csv");
  std::ofstream json(dir / "summary.json");
  if (!csv || !json) {
    throw std::runtime_error("cannot write report files into '" + directory +
                             "'");
  }
  WriteReportCsv(report, csv);
  WriteSummaryJson(report, config, json);
}

}  // namespace sampest
