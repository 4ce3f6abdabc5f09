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

// Item-sampling simulation in rank space.
//
// Items never get identities: a sample is summarized by how many drawn items
// outrank the user's target. Negatives are drawn uniformly with replacement
// from the N - 1 non-target items. Every user owns an RNG substream derived
// from (seed, user_index), so output does not depend on evaluation order.

#ifndef SAMPEST_SAMPLING_H_
#define SAMPEST_SAMPLING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sampest/core.h"

namespace sampest {

inline constexpr std::int64_t kDefaultInitialSize = 100;
inline constexpr std::int64_t kDefaultTerminalSize = 3200;

struct AdaptiveConfig {
  std::int64_t initial_size = kDefaultInitialSize;   // n_0
  std::int64_t terminal_size = kDefaultTerminalSize;  // n_max = n_0 * 2^t

  // Throws unless n_0 >= 2 and n_max is n_0 times a power of two.
  void Validate() const;
  // n_0, 2 n_0, ..., n_max.
  std::vector<std::int64_t> SizeLadder() const;
};

// Sampling cost per doubling level, for choosing n_max after the fact.
struct EfficiencyReport {
  std::vector<std::int64_t> sizes;  // n_j
  std::vector<std::int64_t> counts;  // m_j, users that stopped at n_j
  // C_j, items drawn per user escaping rank 1 at level j. Absent for the
  // terminal level and wherever m_j = 0.
  std::vector<std::optional<double>> costs;
};

// Mixes a stream index into a seed (splitmix64 finalizer).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

std::vector<SampleRecord> SimulateFixed(const RankDataset& dataset,
                                        std::int64_t sample_size,
                                        std::uint64_t seed);

// The whole catalog is the sample: r_u = R_u and n_u = N.
std::vector<SampleRecord> SimulateExact(const RankDataset& dataset);

// Starts with n_0 - 1 negatives; while the target still ranks first and
// n_u < n_max, draws n_u more negatives and doubles n_u.
std::vector<SampleRecord> SimulateAdaptive(const RankDataset& dataset,
                                           const AdaptiveConfig& config,
                                           std::uint64_t seed);

EfficiencyReport AnalyzeEfficiency(std::span<const SampleRecord> records,
                                   const AdaptiveConfig& config,
                                   std::int64_t user_count);

double MeanSampleSize(std::span<const SampleRecord> records);

}  // namespace sampest

#endif  // SAMPEST_SAMPLING_H_
