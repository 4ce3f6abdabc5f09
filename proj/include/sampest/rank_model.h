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

// Conditional law of the sampled rank given the global rank.
//
// A user's sample set holds the target item plus n - 1 items drawn uniformly
// with replacement from the N - 1 other catalog items. A drawn item outranks
// the target with probability theta_R = (R - 1) / (N - 1), so the number of
// items ranked above the target is Binomial(n - 1, theta_R) and
//
//   P(r | R; n) = Bin(r - 1; n - 1, theta_R).

#ifndef SAMPEST_RANK_MODEL_H_
#define SAMPEST_RANK_MODEL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sampest {

double SuccessProb(std::int64_t rank, std::int64_t catalog_size);

// Evaluated in the log domain; exact at theta in {0, 1}.
double RankLikelihood(std::int64_t sampled_rank, std::int64_t rank,
                      std::int64_t sample_size, std::int64_t catalog_size);

// P(r | R; n) for R = 1..N as one vector. Used by the EM kernels.
std::vector<double> LikelihoodOverRanks(std::int64_t sampled_rank,
                                        std::int64_t sample_size,
                                        std::int64_t catalog_size);

// Dense N x n matrix with entry (R - 1, r - 1) = P(r | R). Immutable.
class ConditionalMatrix {
 public:
  // Binomial model; requires 2 <= n <= N.
  static ConditionalMatrix Binomial(std::int64_t sample_size,
                                    std::int64_t catalog_size);
  // Full-information limit: the sample is the whole catalog and r = R.
  static ConditionalMatrix Identity(std::int64_t catalog_size);

  std::int64_t catalog_size() const { return entries_.rows(); }
  std::int64_t sample_size() const { return entries_.cols(); }
  bool exact() const { return exact_; }

  double operator()(std::int64_t rank, std::int64_t sampled_rank) const {
    return entries_(rank - 1, sampled_rank - 1);
  }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  ConditionalMatrix(Eigen::MatrixXd entries, bool exact)
      : entries_(std::move(entries)), exact_(exact) {}

  Eigen::MatrixXd entries_;
  bool exact_ = false;
};

// exact_mode requires n == N and yields the identity matrix.
ConditionalMatrix MakeConditionalMatrix(std::int64_t sample_size,
                                        std::int64_t catalog_size,
                                        bool exact_mode = false);

}  // namespace sampest

#endif  // SAMPEST_RANK_MODEL_H_
