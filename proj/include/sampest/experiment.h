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

// Monte Carlo benchmark of metric estimators against exact ground truth.
//
// A run fixes one ground-truth rank dataset, then for every repeat draws a
// fresh sample set, evaluates each estimator at K = 1..k_max for each metric
// family, and scores it by relative error against the global metric.

#ifndef SAMPEST_EXPERIMENT_H_
#define SAMPEST_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sampest/core.h"
#include "sampest/em.h"
#include "sampest/estimators.h"
#include "sampest/sampling.h"

namespace sampest {

struct ZipfSource {
  double exponent = 1.2;
};
struct RanksFileSource {
  std::string path;
};
struct PmfFileSource {
  std::string path;
};
using RankSource = std::variant<ZipfSource, RanksFileSource, PmfFileSource>;

struct FixedSampler {
  std::int64_t size = kDefaultInitialSize;
  // Full-information limit; requires size == N and uses r_u = R_u.
  bool exact = false;
};
struct AdaptiveSampler {
  AdaptiveConfig config;
};
using SamplerConfig = std::variant<FixedSampler, AdaptiveSampler>;

enum class PriorKind { kUniform, kMle, kFile };

struct PriorSpec {
  PriorKind kind = PriorKind::kUniform;
  std::string path;  // kFile only

  // "uniform", "mle" or "file:PATH".
  static PriorSpec Parse(std::string_view text);
  std::string Name() const;
};

enum class EstimatorKind { kNaive, kMle, kAdaptiveMle, kMn, kBv };

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::kNaive;
  PriorSpec prior;                 // kMn and kBv
  double gamma = kDefaultBvGamma;  // kBv

  // naive | mle | adaptive_mle | mn[:PRIOR] | bv[:PRIOR]; a missing prior
  // falls back to `default_prior`.
  static EstimatorSpec Parse(std::string_view text,
                             const PriorSpec& default_prior, double gamma);
  // Report label, e.g. "mn_mle" or "bv_uniform".
  std::string Name() const;
};

// Comma-separated list for EstimatorSpec::Parse.
std::vector<EstimatorSpec> ParseEstimatorList(std::string_view text,
                                              const PriorSpec& default_prior,
                                              double gamma);
std::vector<MetricFamily> ParseMetricList(std::string_view text);

inline constexpr int kDefaultKMax = 50;
inline constexpr int kDefaultRepeats = 100;

struct ExperimentConfig {
  std::int64_t catalog_size = 0;  // N
  std::int64_t user_count = 0;    // M; ignored for a ranks file
  RankSource rank_source = ZipfSource{};
  SamplerConfig sampler = FixedSampler{};
  std::vector<EstimatorSpec> estimators;
  std::vector<MetricFamily> metrics = {MetricFamily::kRecall};
  int k_max = kDefaultKMax;
  int repeats = kDefaultRepeats;
  std::uint64_t seed = 0;
  EmConfig em;
  // Worker threads across repeats. Results do not depend on this.
  int threads = 1;

  void Validate() const;
};

// Draws N-catalog ranks i.i.d. from pmf(R) proportional to R^-s.
RankDataset SynthZipfRanks(std::int64_t catalog_size, std::int64_t user_count,
                           double exponent, std::uint64_t seed);
// Draws ranks i.i.d. from an explicit pmf; N is the pmf length.
RankDataset SynthRanksFromPmf(const RankPmf& pmf, std::int64_t user_count,
                              std::uint64_t seed);
RankPmf ZipfPmf(std::int64_t catalog_size, double exponent);

struct RelativeError {
  double average = 0.0;  // NaN when every K was skipped
  std::vector<double> per_k;  // NaN where the true value is 0
  int skipped = 0;
};

// Mean over K of |est - true| / true, skipping K with true == 0.
RelativeError RelativeErrorCurve(std::span<const double> truth,
                                 std::span<const double> estimate);

// For each repeat, compares argmax of the estimates with argmax of the truth
// (ties go to the lowest model index on both sides). Returns the number of
// repeats where they agree. estimates[repeat][model].
int WinnerAccuracy(std::span<const double> truth,
                   const std::vector<std::vector<double>>& estimates);

struct CurvePoint {
  int k = 0;
  double truth = 0.0;
  double estimate_mean = 0.0;
  double estimate_std = 0.0;
  double rel_err_mean = 0.0;  // NaN where truth == 0
};

struct EstimatorResult {
  std::string estimator;
  MetricFamily metric = MetricFamily::kRecall;
  // Average relative error over K, summarized across repeats.
  double avg_rel_err_mean = 0.0;
  double avg_rel_err_std = 0.0;
  int skipped_k = 0;
  std::vector<CurvePoint> curve;
  std::vector<double> avg_rel_err_by_repeat;
  std::vector<std::vector<double>> estimates;  // [repeat][K - 1]
};

struct ErrorReport {
  std::int64_t catalog_size = 0;
  std::int64_t user_count = 0;
  double mean_sample_size = 0.0;  // averaged over users and repeats
  std::vector<EstimatorResult> results;

  const EstimatorResult& Find(std::string_view estimator,
                              MetricFamily metric) const;
};

// Runs every estimator on one sample set at K = 1..k_max.
// Result is indexed [estimator][metric][K - 1]. Estimators that need a
// shared sample size throw std::invalid_argument on mixed sizes.
std::vector<std::vector<std::vector<double>>> EstimateCurves(
    std::span<const SampleRecord> samples, std::int64_t catalog_size,
    const std::vector<EstimatorSpec>& estimators,
    const std::vector<MetricFamily>& metrics, int k_max,
    const EmConfig& em_config = {}, bool exact_mode = false);

RankDataset LoadGroundTruth(const ExperimentConfig& config);

ErrorReport RunExperiment(const ExperimentConfig& config);
ErrorReport RunExperiment(const ExperimentConfig& config,
                          const RankDataset& dataset);

// report.csv: estimator,metric,K,true,estimate_mean,estimate_std,rel_err_mean
void WriteReportCsv(const ErrorReport& report, std::ostream& out);
// summary.json: resolved config plus per (estimator, metric) aggregates.
void WriteSummaryJson(const ErrorReport& report,
                      const ExperimentConfig& config, std::ostream& out);
// Writes both files into `directory` (created if missing).
void WriteReport(const ErrorReport& report, const ExperimentConfig& config,
                 const std::string& directory);

}  // namespace sampest

#endif  // SAMPEST_EXPERIMENT_H_
