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

#include "sampest/sampling.h"

#include <random>
#include <stdexcept>
#include <string>

namespace sampest {
namespace {

// Draws negatives for one user and counts those ranked above the target.
class UserSampler {
 public:
  UserSampler(std::uint64_t seed, std::int64_t user_index,
              std::int64_t catalog_size, std::int64_t rank)
      : rng_(DeriveSeed(seed, static_cast<std::uint64_t>(user_index))),
        negative_(1, catalog_size - 1),
        rank_(rank) {}

  // Negatives are labelled 1..N-1; label j < R maps to global rank j, the
  // rest shift past the target. Only the comparison with R matters.
  std::int64_t CountOutranking(std::int64_t draws) {
    std::int64_t above = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
      if (negative_(rng_) < rank_) ++above;
    }
    return above;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::int64_t> negative_;
  std::int64_t rank_;
};

}  // namespace

void AdaptiveConfig::Validate() const {
  if (initial_size < 2) {
    throw std::invalid_argument("initial sample size n0 must be >= 2");
  }
  std::int64_t size = initial_size;
  while (size < terminal_size) size *= 2;
  if (size != terminal_size) {
    throw std::invalid_argument(
        "terminal size nmax must equal n0 times a power of two");
  }
}

std::vector<std::int64_t> AdaptiveConfig::SizeLadder() const {
  Validate();
  std::vector<std::int64_t> ladder;
  for (std::int64_t size = initial_size; size <= terminal_size; size *= 2) {
    ladder.push_back(size);
  }
  return ladder;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<SampleRecord> SimulateFixed(const RankDataset& dataset,
                                        std::int64_t sample_size,
                                        std::uint64_t seed) {
  // A one-level ladder is the fixed-size process.
  return SimulateAdaptive(dataset, AdaptiveConfig{sample_size, sample_size},
                          seed);
}

std::vector<SampleRecord> SimulateExact(const RankDataset& dataset) {
  dataset.Validate();
  std::vector<SampleRecord> records;
  records.reserve(dataset.ranks.size());
  for (std::size_t u = 0; u < dataset.ranks.size(); ++u) {
    records.push_back({static_cast<std::int64_t>(u), dataset.ranks[u],
                       dataset.catalog_size});
  }
  return records;
}

std::vector<SampleRecord> SimulateAdaptive(const RankDataset& dataset,
                                           const AdaptiveConfig& config,
                                           std::uint64_t seed) {
  dataset.Validate();
  config.Validate();
  std::vector<SampleRecord> records;
  records.reserve(dataset.ranks.size());
  for (std::size_t u = 0; u < dataset.ranks.size(); ++u) {
    const auto user = static_cast<std::int64_t>(u);
    UserSampler sampler(seed, user, dataset.catalog_size, dataset.ranks[u]);
    std::int64_t size = config.initial_size;
    std::int64_t above = sampler.CountOutranking(size - 1);
    while (above == 0 && size < config.terminal_size) {
      above += sampler.CountOutranking(size);
      size *= 2;
    }
    records.push_back({user, above + 1, size});
  }
  return records;
}

EfficiencyReport AnalyzeEfficiency(std::span<const SampleRecord> records,
                                   const AdaptiveConfig& config,
                                   std::int64_t user_count) {
  const std::vector<std::int64_t> ladder = config.SizeLadder();
  if (static_cast<std::int64_t>(records.size()) != user_count) {
    throw std::invalid_argument("expected " + std::to_string(user_count) +
                                " records, got " +
                                std::to_string(records.size()));
  }
  EfficiencyReport report;
  report.sizes = ladder;
  report.counts.assign(ladder.size(), 0);
  for (const auto& rec : records) {
    std::size_t level = 0;
    while (level < ladder.size() && ladder[level] != rec.sample_size) ++level;
    if (level == ladder.size()) {
      throw std::invalid_argument(
          "sample size " + std::to_string(rec.sample_size) +
          " is not on the configured doubling ladder");
    }
    ++report.counts[level];
  }

  const std::size_t terminal = ladder.size() - 1;
  report.costs.assign(ladder.size(), std::nullopt);
  std::int64_t stopped_before = 0;
  for (std::size_t j = 0; j < terminal; ++j) {
    const std::int64_t m_j = report.counts[j];
    if (m_j > 0) {
      const std::int64_t remaining = user_count - stopped_before;
      const std::int64_t new_items =
          j == 0 ? ladder[0] : ladder[j] - ladder[j - 1];
      report.costs[j] = static_cast<double>(remaining) *
                        static_cast<double>(new_items) /
                        static_cast<double>(m_j);
    }
    stopped_before += m_j;
  }
  return report;
}

double MeanSampleSize(std::span<const SampleRecord> records) {
  if (records.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& rec : records) sum += static_cast<double>(rec.sample_size);
  return sum / static_cast<double>(records.size());
}

}  // namespace sampest
