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

#include "sampest/rank_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sampest {
namespace {

void CheckRank(std::int64_t rank, std::int64_t catalog_size) {
  if (catalog_size < 2) {
    throw std::invalid_argument("catalog size N must be >= 2");
  }
  if (rank < 1 || rank > catalog_size) {
    throw std::invalid_argument("global rank " + std::to_string(rank) +
                                " outside [1, " +
                                std::to_string(catalog_size) + "]");
  }
}

void CheckSampled(std::int64_t sampled_rank, std::int64_t sample_size) {
  if (sample_size < 2) {
    throw std::invalid_argument("sample size must be >= 2");
  }
  if (sampled_rank < 1 || sampled_rank > sample_size) {
    throw std::invalid_argument("sampled rank " +
                                std::to_string(sampled_rank) +
                                " outside [1, " + std::to_string(sample_size) +
                                "]");
  }
}

// Binomial pmf over k successes in `trials`, with the log coefficient passed
// in so row/column sweeps evaluate lgamma once.
double BinomialPmf(std::int64_t k, std::int64_t trials, double theta,
                   double log_coef) {
  if (theta <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (theta >= 1.0) return k == trials ? 1.0 : 0.0;
  const double log_p = log_coef + static_cast<double>(k) * std::log(theta) +
                       static_cast<double>(trials - k) * std::log1p(-theta);
  return std::max(0.0, std::exp(log_p));
}

double LogBinomialCoef(std::int64_t trials, std::int64_t k) {
  return std::lgamma(static_cast<double>(trials) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(trials - k) + 1.0);
}

}  // namespace

double SuccessProb(std::int64_t rank, std::int64_t catalog_size) {
  CheckRank(rank, catalog_size);
  return static_cast<double>(rank - 1) / static_cast<double>(catalog_size - 1);
}

double RankLikelihood(std::int64_t sampled_rank, std::int64_t rank,
                      std::int64_t sample_size, std::int64_t catalog_size) {
  CheckSampled(sampled_rank, sample_size);
  const double theta = SuccessProb(rank, catalog_size);
  const std::int64_t trials = sample_size - 1;
  const std::int64_t k = sampled_rank - 1;
  return BinomialPmf(k, trials, theta, LogBinomialCoef(trials, k));
}

std::vector<double> LikelihoodOverRanks(std::int64_t sampled_rank,
                                        std::int64_t sample_size,
                                        std::int64_t catalog_size) {
  CheckSampled(sampled_rank, sample_size);
  CheckRank(1, catalog_size);
  const std::int64_t trials = sample_size - 1;
  const std::int64_t k = sampled_rank - 1;
  const double log_coef = LogBinomialCoef(trials, k);
  const double denom = static_cast<double>(catalog_size - 1);
  std::vector<double> out(static_cast<std::size_t>(catalog_size));
  for (std::int64_t rank = 1; rank <= catalog_size; ++rank) {
    out[rank - 1] = BinomialPmf(k, trials,
                                static_cast<double>(rank - 1) / denom,
                                log_coef);
  }
  return out;
}

ConditionalMatrix ConditionalMatrix::Binomial(std::int64_t sample_size,
                                              std::int64_t catalog_size) {
  CheckRank(1, catalog_size);
  if (sample_size < 2) {
    throw std::invalid_argument("sample size must be >= 2");
  }
  if (sample_size > catalog_size) {
    throw std::invalid_argument(
        "sample size " + std::to_string(sample_size) +
        " exceeds the catalog size " + std::to_string(catalog_size));
  }
  const std::int64_t trials = sample_size - 1;
  std::vector<double> log_coef(static_cast<std::size_t>(sample_size));
  for (std::int64_t k = 0; k <= trials; ++k) {
    log_coef[k] = LogBinomialCoef(trials, k);
  }
  Eigen::MatrixXd entries(catalog_size, sample_size);
  const double denom = static_cast<double>(catalog_size - 1);
  for (std::int64_t rank = 1; rank <= catalog_size; ++rank) {
    const double theta = static_cast<double>(rank - 1) / denom;
    for (std::int64_t k = 0; k <= trials; ++k) {
      entries(rank - 1, k) = BinomialPmf(k, trials, theta, log_coef[k]);
    }
  }
  return ConditionalMatrix(std::move(entries), /*exact=*/false);
}

ConditionalMatrix ConditionalMatrix::Identity(std::int64_t catalog_size) {
  CheckRank(1, catalog_size);
  return ConditionalMatrix(
      Eigen::MatrixXd::Identity(catalog_size, catalog_size), /*exact=*/true);
}

ConditionalMatrix MakeConditionalMatrix(std::int64_t sample_size,
                                        std::int64_t catalog_size,
                                        bool exact_mode) {
  if (exact_mode) {
    if (sample_size != catalog_size) {
      throw std::invalid_argument(
          "exact mode requires the sample size to equal the catalog size");
    }
    return ConditionalMatrix::Identity(catalog_size);
  }
  return ConditionalMatrix::Binomial(sample_size, catalog_size);
}

}  // namespace sampest
