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

#include "sampest/core.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sampest {
namespace {

constexpr double kPmfSumTolerance = 1e-9;

void ValidateProbabilities(const std::vector<double>& probs,
                           const char* what) {
  if (probs.empty()) {
    throw std::invalid_argument(std::string(what) + " is empty");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(std::string(what) +
                                  " has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPmfSumTolerance) {
    throw std::invalid_argument(std::string(what) + " sums to " +
                                std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

std::string_view MetricFamilyName(MetricFamily family) {
  switch (family) {
    case MetricFamily::kRecall:
      return "recall";
    case MetricFamily::kNdcg:
      return "ndcg";
    case MetricFamily::kAp:
      return "ap";
  }
  return "unknown";
}

MetricFamily ParseMetricFamily(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "recall") return MetricFamily::kRecall;
  if (lower == "ndcg") return MetricFamily::kNdcg;
  if (lower == "ap") return MetricFamily::kAp;
  throw std::invalid_argument("unknown metric '" + std::string(name) +
                              "' (expected recall, ndcg or ap)");
}

void MetricSpec::Validate() const {
  if (cutoff < 1) {
    throw std::invalid_argument("metric cutoff K must be >= 1");
  }
}

void RankDataset::Validate() const {
  if (catalog_size < 2) {
    throw std::invalid_argument("catalog size N must be >= 2");
  }
  if (ranks.empty()) {
    throw std::invalid_argument("dataset needs at least one user");
  }
  for (std::size_t u = 0; u < ranks.size(); ++u) {
    if (ranks[u] < 1 || ranks[u] > catalog_size) {
      throw std::invalid_argument("rank of user " + std::to_string(u) +
                                  " is outside [1, N]");
    }
  }
}

void SampleRecord::Validate() const {
  if (sample_size < 2) {
    throw std::invalid_argument("sample size must be >= 2");
  }
  if (sampled_rank < 1 || sampled_rank > sample_size) {
    throw std::invalid_argument("sampled rank must lie in [1, sample_size]");
  }
}

RankPmf RankPmf::Uniform(std::int64_t catalog_size) {
  if (catalog_size < 1) {
    throw std::invalid_argument("uniform pmf needs at least one rank");
  }
  return RankPmf{std::vector<double>(static_cast<std::size_t>(catalog_size),
                                     1.0 / static_cast<double>(catalog_size))};
}

void RankPmf::Validate() const { ValidateProbabilities(probs, "rank pmf"); }

void SampledPmf::Validate() const {
  ValidateProbabilities(probs, "sampled pmf");
}

double MetricValue(const MetricSpec& spec, std::int64_t rank) {
  if (rank < 1 || rank > spec.cutoff) return 0.0;
  switch (spec.family) {
    case MetricFamily::kRecall:
      return 1.0;
    case MetricFamily::kNdcg:
      return 1.0 / std::log2(static_cast<double>(rank) + 1.0);
    case MetricFamily::kAp:
      return 1.0 / static_cast<double>(rank);
  }
  return 0.0;
}

std::vector<double> TruncatedMetricVector(const MetricSpec& spec,
                                          std::int64_t length) {
  std::vector<double> out(static_cast<std::size_t>(length));
  for (std::int64_t rank = 1; rank <= length; ++rank) {
    out[rank - 1] = MetricValue(spec, rank);
  }
  return out;
}

double GlobalMetric(const RankDataset& dataset, const MetricSpec& spec) {
  double sum = 0.0;
  for (std::int64_t rank : dataset.ranks) sum += MetricValue(spec, rank);
  return sum / static_cast<double>(dataset.ranks.size());
}

double NaiveSampledMetric(std::span<const SampleRecord> samples,
                          const MetricSpec& spec) {
  if (samples.empty()) {
    throw std::invalid_argument("naive sampled metric needs samples");
  }
  double sum = 0.0;
  for (const auto& s : samples) sum += MetricValue(spec, s.sampled_rank);
  return sum / static_cast<double>(samples.size());
}

SampledPmf EmpiricalSampledPmf(std::span<const SampleRecord> samples,
                               std::int64_t sample_size) {
  if (samples.empty()) {
    throw std::invalid_argument("empirical sampled pmf needs samples");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(sample_size), 0);
  for (const auto& s : samples) {
    if (s.sample_size != sample_size) {
      throw std::invalid_argument(
          "mixed sample sizes: the least-squares estimators require every "
          "user to share one sample size (use the EM estimator instead)");
    }
    s.Validate();
    ++counts[s.sampled_rank - 1];
  }
  SampledPmf pmf;
  pmf.probs.resize(counts.size());
  const double total = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf.probs[i] = static_cast<double>(counts[i]) / total;
  }
  return pmf;
}

RankPmf EmpiricalRankPmf(const RankDataset& dataset) {
  dataset.Validate();
  std::vector<std::int64_t> counts(
      static_cast<std::size_t>(dataset.catalog_size), 0);
  for (std::int64_t rank : dataset.ranks) ++counts[rank - 1];
  RankPmf pmf;
  pmf.probs.resize(counts.size());
  const double total = static_cast<double>(dataset.ranks.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf.probs[i] = static_cast<double>(counts[i]) / total;
  }
  return pmf;
}

double PluginMetricFromPmf(const RankPmf& pmf, const MetricSpec& spec) {
  const std::int64_t last = std::min<std::int64_t>(spec.cutoff, pmf.size());
  double sum = 0.0;
  for (std::int64_t rank = 1; rank <= last; ++rank) {
    sum += pmf.at(rank) * MetricValue(spec, rank);
  }
  return sum;
}

double ApplyAdjustedMetric(const AdjustedMetric& adjusted,
                           const SampledPmf& sampled_pmf) {
  if (adjusted.size() != sampled_pmf.size()) {
    throw std::invalid_argument(
        "adjusted metric length " + std::to_string(adjusted.size()) +
        " does not match sampled pmf length " +
        std::to_string(sampled_pmf.size()));
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < adjusted.values.size(); ++r) {
    sum += adjusted.values[r] * sampled_pmf.probs[r];
  }
  return sum;
}

}  // namespace sampest
