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

// Closed-form adjusted-metric estimators.
//
// Both estimators learn a score x(r) over sampled ranks so that the average
// of x(r_u) over users tracks the global top-K metric. With A(R, r) = P(r|R),
// D = diag(P(R)), b(R) = M(R) truncated at K and Lambda = diag(column sums
// of A):
//
//   MN:  minimizes  L1 + L2 = ||sqrt(D)(A x - b)||^2
//                             + (1/M)(x' Lambda x - ||A x||^2),
//        x = (A'DA - A'A/M + Lambda/M)^-1 A'D b.
//
//   BV:  minimizes  ||A~ x - b~||^2 + gamma (x' diag(c) x - ||A~ x||^2),
//        with A~ = sqrt(D) A, b~ = sqrt(D) b, c = A'D 1, giving
//        x = ((1 - gamma) A~'A~ + gamma diag(c))^-1 A~' b~.
//
// MN weights the variance term by 1/M (number of test users); BV's weight
// gamma is fixed and the solution does not depend on M.

#ifndef SAMPEST_ESTIMATORS_H_
#define SAMPEST_ESTIMATORS_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "sampest/core.h"
#include "sampest/rank_model.h"

namespace sampest {

inline constexpr double kDefaultBvGamma = 0.01;

struct LsProblem {
  RankPmf prior;              // P(R), length N
  ConditionalMatrix cond;     // A, N x n
  std::vector<double> target;  // b, length N
  std::int64_t user_count = 1;  // M

  void Validate() const;
};

LsProblem MakeLsProblem(RankPmf prior, ConditionalMatrix cond,
                        const MetricSpec& spec, std::int64_t user_count);

// Factorizes the MN normal-equations matrix once; Solve() can then be called
// for many targets (one per metric and cutoff). Immutable after construction.
class MnSolver {
 public:
  MnSolver(const RankPmf& prior, const ConditionalMatrix& cond,
           std::int64_t user_count);

  AdjustedMetric Solve(std::span<const double> target) const;

  const Eigen::MatrixXd& system_matrix() const { return system_; }
  // Set when the plain factorization failed and the ridge retry was used.
  bool used_ridge() const { return used_ridge_; }

 private:
  Eigen::MatrixXd weighted_design_t_;  // A'D, n x N
  Eigen::MatrixXd system_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  bool used_ridge_ = false;
};

class BvSolver {
 public:
  BvSolver(const RankPmf& prior, const ConditionalMatrix& cond, double gamma);

  AdjustedMetric Solve(std::span<const double> target) const;

  const Eigen::MatrixXd& system_matrix() const { return system_; }

 private:
  Eigen::MatrixXd weighted_design_t_;  // A~' sqrt(D) = A'D, n x N
  Eigen::MatrixXd system_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

AdjustedMetric SolveMn(const LsProblem& problem);
AdjustedMetric SolveBv(const LsProblem& problem, double gamma);

struct ObjectiveValue {
  double bias = 0.0;      // L1
  double variance = 0.0;  // L2
  double total = 0.0;     // L1 + L2
};

// MN objective at x. The variance part is non-negative up to rounding.
ObjectiveValue EvalObjective(const AdjustedMetric& x,
                             const LsProblem& problem);

// BV objective at x: bias + gamma * sum_R P(R) Var[x(r) | R].
double EvalBvObjective(const AdjustedMetric& x, const LsProblem& problem,
                       double gamma);

enum class LsMethod { kMn, kBv };

// Composes conditional matrix, solver and empirical sampled pmf into a
// single estimate. All samples must share one sample size.
double EstimateWithAdjusted(std::span<const SampleRecord> samples,
                            std::int64_t catalog_size, const MetricSpec& spec,
                            const RankPmf& prior, LsMethod method,
                            double gamma = kDefaultBvGamma,
                            bool exact_mode = false);

}  // namespace sampest

#endif  // SAMPEST_ESTIMATORS_H_
