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

#include "sampest/em.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "sampest/rank_model.h"

namespace sampest {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Row g holds P(r_g | R; n_g) for R = 1..N.
RowMatrix BuildKernel(std::span<const ObservationGroup> groups,
                      std::int64_t catalog_size) {
  RowMatrix kernel(static_cast<Eigen::Index>(groups.size()), catalog_size);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& group = groups[g];
    if (group.count < 1) {
      throw std::invalid_argument("observation group with non-positive count");
    }
    const std::vector<double> row = LikelihoodOverRanks(
        group.sampled_rank, group.sample_size, catalog_size);
    double mass = 0.0;
    for (std::int64_t k = 0; k < catalog_size; ++k) {
      kernel(static_cast<Eigen::Index>(g), k) = row[k];
      mass += row[k];
    }
    if (!(mass > 0.0)) {
      throw std::invalid_argument(
          "observation (r=" + std::to_string(group.sampled_rank) +
          ", n=" + std::to_string(group.sample_size) +
          ") has zero likelihood under every global rank");
    }
  }
  return kernel;
}

// Neumaier-compensated sum of count * log(mixture density).
double CompensatedLogLikelihood(const Eigen::VectorXd& counts,
                                const Eigen::VectorXd& density) {
  double sum = 0.0;
  double carry = 0.0;
  for (Eigen::Index g = 0; g < counts.size(); ++g) {
    const double term = counts[g] * std::log(density[g]);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

void CheckDensity(const Eigen::VectorXd& density,
                  std::span<const ObservationGroup> groups) {
  for (Eigen::Index g = 0; g < density.size(); ++g) {
    if (!(density[g] > 0.0)) {
      const auto& group = groups[static_cast<std::size_t>(g)];
      throw std::runtime_error(
          "observation (r=" + std::to_string(group.sampled_rank) +
          ", n=" + std::to_string(group.sample_size) +
          ") has zero likelihood under the current rank pmf");
    }
  }
}

}  // namespace

void EmConfig::Validate() const {
  if (max_iters < 1) {
    throw std::invalid_argument("EM max_iters must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("EM tolerance must be > 0");
  }
  if (init) init->Validate();
}

std::vector<ObservationGroup> GroupObservations(
    std::span<const SampleRecord> samples) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
  for (const auto& s : samples) {
    s.Validate();
    ++counts[{s.sample_size, s.sampled_rank}];
  }
  std::vector<ObservationGroup> groups;
  groups.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    groups.push_back({key.second, key.first, count});
  }
  return groups;
}

EmResult FitRankPmf(std::span<const ObservationGroup> groups,
                    std::int64_t catalog_size, const EmConfig& config,
                    const EmObserver& observer) {
  config.Validate();
  if (catalog_size < 2) {
    throw std::invalid_argument("catalog size N must be >= 2");
  }
  if (groups.empty()) {
    throw std::invalid_argument("EM needs at least one observation");
  }
  if (config.init && config.init->size() != catalog_size) {
    throw std::invalid_argument("EM init pmf length does not match N");
  }

  const RowMatrix kernel = BuildKernel(groups, catalog_size);
  Eigen::VectorXd counts(static_cast<Eigen::Index>(groups.size()));
  double users = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    counts[static_cast<Eigen::Index>(g)] = static_cast<double>(groups[g].count);
    users += static_cast<double>(groups[g].count);
  }

  Eigen::VectorXd pi =
      config.init ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(
                        config.init->probs.data(), catalog_size))
                  : Eigen::VectorXd::Constant(
                        catalog_size, 1.0 / static_cast<double>(catalog_size));

  EmResult result;
  result.log_likelihoods.reserve(static_cast<std::size_t>(config.max_iters) +
                                 1);
  if (observer) observer(0, std::span<const double>(pi.data(), pi.size()));

  Eigen::VectorXd density(counts.size());
  Eigen::VectorXd next(catalog_size);
  for (int iter = 0; iter < config.max_iters; ++iter) {
    // E-step, folded: users in group g share the posterior
    // pi .* kernel.row(g) / density[g].
    density.noalias() = kernel * pi;
    CheckDensity(density, groups);
    result.log_likelihoods.push_back(
        CompensatedLogLikelihood(counts, density));
    const Eigen::VectorXd weights = counts.cwiseQuotient(density);
    next.noalias() = kernel.transpose() * weights;
    // M-step.
    next = pi.cwiseProduct(next) / users;

    const double change = (next - pi).cwiseAbs().maxCoeff();
    pi.swap(next);
    ++result.iterations;
    if (observer) {
      observer(result.iterations,
               std::span<const double>(pi.data(), pi.size()));
    }
    if (change < config.tol) {
      result.converged = true;
      break;
    }
  }
  density.noalias() = kernel * pi;
  CheckDensity(density, groups);
  result.log_likelihoods.push_back(CompensatedLogLikelihood(counts, density));
  result.pmf.probs.assign(pi.data(), pi.data() + pi.size());
  return result;
}

EmResult FitRankPmf(std::span<const SampleRecord> samples,
                    std::int64_t catalog_size, const EmConfig& config) {
  const std::vector<ObservationGroup> groups = GroupObservations(samples);
  return FitRankPmf(groups, catalog_size, config);
}

double ObservedLogLikelihood(std::span<const ObservationGroup> groups,
                             const RankPmf& pmf) {
  if (groups.empty()) return 0.0;
  const RowMatrix kernel = BuildKernel(groups, pmf.size());
  Eigen::VectorXd counts(static_cast<Eigen::Index>(groups.size()));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    counts[static_cast<Eigen::Index>(g)] = static_cast<double>(groups[g].count);
  }
  const Eigen::VectorXd density =
      kernel * Eigen::Map<const Eigen::VectorXd>(pmf.probs.data(), pmf.size());
  return CompensatedLogLikelihood(counts, density);
}

double AdaptiveMleEstimate(std::span<const SampleRecord> samples,
                           std::int64_t catalog_size, const MetricSpec& spec,
                           const EmConfig& config) {
  spec.Validate();
  return PluginMetricFromPmf(FitRankPmf(samples, catalog_size, config).pmf,
                             spec);
}

}  // namespace sampest
