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

// Maximum-likelihood fit of the global rank pmf from sampled ranks.
//
// Each observation (r_u, n_u) is a draw from the mixture
//   p(r_u) = sum_R pi_R Bin(r_u - 1; n_u - 1, theta_R),
// so users may carry different sample sizes (adaptive sampling). EM:
//   E: phi_u(k) = pi_k P(r_u | k; n_u) / sum_j pi_j P(r_u | j; n_u)
//   M: pi_k    = (1/M) sum_u phi_u(k)
// Users sharing (r, n) have identical posteriors, so the fit runs over
// distinct pairs weighted by their counts.

#ifndef SAMPEST_EM_H_
#define SAMPEST_EM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sampest/core.h"

namespace sampest {

struct EmConfig {
  int max_iters = 500;
  double tol = 1e-8;  // on max_k |pi_new(k) - pi_old(k)|
  std::optional<RankPmf> init;  // uniform when empty

  void Validate() const;
};

struct EmResult {
  RankPmf pmf;
  // log_likelihoods[t] is the observed-data log-likelihood of the t-th
  // iterate, starting from the initial pmf; size is iterations + 1.
  std::vector<double> log_likelihoods;
  int iterations = 0;
  bool converged = false;
};

struct ObservationGroup {
  std::int64_t sampled_rank = 1;
  std::int64_t sample_size = 2;
  std::int64_t count = 0;

  friend bool operator==(const ObservationGroup&,
                         const ObservationGroup&) = default;
};

// Distinct (r, n) pairs with multiplicities, ordered by (n, r).
std::vector<ObservationGroup> GroupObservations(
    std::span<const SampleRecord> samples);

// Called with each iterate (index 0 is the initial pmf).
using EmObserver =
    std::function<void(int iteration, std::span<const double> pmf)>;

EmResult FitRankPmf(std::span<const ObservationGroup> groups,
                    std::int64_t catalog_size, const EmConfig& config = {},
                    const EmObserver& observer = {});

EmResult FitRankPmf(std::span<const SampleRecord> samples,
                    std::int64_t catalog_size, const EmConfig& config = {});

double ObservedLogLikelihood(std::span<const ObservationGroup> groups,
                             const RankPmf& pmf);

// EM fit followed by the plug-in estimate sum_{R<=K} pi_R M(R).
double AdaptiveMleEstimate(std::span<const SampleRecord> samples,
                           std::int64_t catalog_size, const MetricSpec& spec,
                           const EmConfig& config = {});

}  // namespace sampest

#endif  // SAMPEST_EM_H_
