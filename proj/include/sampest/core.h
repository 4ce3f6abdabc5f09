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

// Domain types and top-K metric computation for a single hidden target item
// per user. All ranks are 1-based: rank 1 is the best position.

#ifndef SAMPEST_CORE_H_
#define SAMPEST_CORE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sampest {

enum class MetricFamily { kRecall, kNdcg, kAp };

std::string_view MetricFamilyName(MetricFamily family);

// Accepts "recall", "ndcg" and "ap" (case-insensitive).
MetricFamily ParseMetricFamily(std::string_view name);

struct MetricSpec {
  MetricFamily family = MetricFamily::kRecall;
  int cutoff = 1;  // K

  void Validate() const;
};

// Ground-truth global rank of each test user's target item.
struct RankDataset {
  std::int64_t catalog_size = 0;     // N
  std::vector<std::int64_t> ranks;   // R_u in [1, N]

  std::int64_t user_count() const {
    return static_cast<std::int64_t>(ranks.size());
  }
  void Validate() const;
};

// Observed rank of the target item inside a user's sample set.
struct SampleRecord {
  std::int64_t user_index = 0;
  std::int64_t sampled_rank = 1;  // r_u in [1, n_u]
  std::int64_t sample_size = 2;   // n_u, target included

  void Validate() const;
  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

// Probability vector over global ranks; probs[R - 1] = P(R).
struct RankPmf {
  std::vector<double> probs;

  static RankPmf Uniform(std::int64_t catalog_size);

  std::int64_t size() const { return static_cast<std::int64_t>(probs.size()); }
  double at(std::int64_t rank) const { return probs[rank - 1]; }
  void Validate() const;
};

// Probability vector over sampled ranks; probs[r - 1] = P~(r).
struct SampledPmf {
  std::vector<double> probs;

  std::int64_t size() const { return static_cast<std::int64_t>(probs.size()); }
  void Validate() const;
};

// Learned per-sampled-rank score; values[r - 1] = M^(r).
struct AdjustedMetric {
  std::vector<double> values;

  std::int64_t size() const {
    return static_cast<std::int64_t>(values.size());
  }
};

// Per-rank metric score, zero beyond the cutoff.
//   Recall: 1, NDCG: 1 / log2(R + 1), AP: 1 / R.
double MetricValue(const MetricSpec& spec, std::int64_t rank);

// The K-truncated metric evaluated at ranks 1..length.
std::vector<double> TruncatedMetricVector(const MetricSpec& spec,
                                          std::int64_t length);

double GlobalMetric(const RankDataset& dataset, const MetricSpec& spec);

double NaiveSampledMetric(std::span<const SampleRecord> samples,
                          const MetricSpec& spec);

// Throws std::invalid_argument when sample sizes differ from `sample_size`;
// heterogeneous sizes must go through the EM route.
SampledPmf EmpiricalSampledPmf(std::span<const SampleRecord> samples,
                               std::int64_t sample_size);

// Fraction of users at each global rank.
RankPmf EmpiricalRankPmf(const RankDataset& dataset);

double PluginMetricFromPmf(const RankPmf& pmf, const MetricSpec& spec);

double ApplyAdjustedMetric(const AdjustedMetric& adjusted,
                           const SampledPmf& sampled_pmf);

}  // namespace sampest

#endif  // SAMPEST_CORE_H_
