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

// Brute-force reference computations for small instances. Nothing in here
// calls into the estimation library; results are meant to be compared
// against it.

#ifndef SAMPEST_ORACLE_H_
#define SAMPEST_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace sampest::oracle {

using Matrix = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting. Square systems up to 8x8.
// Throws std::runtime_error on a (numerically) singular matrix.
std::vector<double> DenseSolve(Matrix matrix, std::vector<double> rhs);

// Entry [R - 1][r - 1] = P(r | R) for the with-replacement sampling model.
Matrix BinomialConditional(int sample_size, int catalog_size);

struct NormalEquations {
  Matrix matrix;
  std::vector<double> rhs;
};

// Normal equations of the MN objective, assembled term by term:
//   sum_R P(R) a_R a_R' - (1/M) sum_R a_R a_R' + (1/M) diag(sum_R a_R),
//   rhs = sum_R P(R) b_R a_R, with a_R the R-th row of `cond`.
NormalEquations MnNormalEquations(const Matrix& cond,
                                  std::span<const double> prior,
                                  std::span<const double> target,
                                  double users);

// Normal equations of the BV objective:
//   (1 - gamma) sum_R P(R) a_R a_R' + gamma diag(sum_R P(R) a_R).
NormalEquations BvNormalEquations(const Matrix& cond,
                                  std::span<const double> prior,
                                  std::span<const double> target,
                                  double gamma);

struct Observation {
  int sampled_rank = 1;
  int sample_size = 2;
};

// Binomial mixture likelihood written out with explicit products.
double ObservationProbability(int sampled_rank, int sample_size, int rank,
                              int catalog_size);

double MixtureLogLikelihood(std::span<const Observation> observations,
                            std::span<const double> pmf, int catalog_size);

struct GridMle {
  std::vector<double> pmf;
  double log_likelihood = 0.0;
};

// Scores every point of the simplex grid {k * step} over N <= 4 ranks and
// returns the first best point in lexicographic order.
GridMle SimplexGridMle(std::span<const Observation> observations,
                       int catalog_size, double step);

struct VarianceCheck {
  double analytic = 0.0;
  double empirical = 0.0;
  double standard_error = 0.0;  // of the empirical variance

  bool WithinStandardErrors(double multiple) const;
};

// Var[sum_i w_i X_i] for X ~ Multinomial(trials, theta), analytically and by
// Monte Carlo over mc_runs draws.
VarianceCheck WeightedMultinomialVarianceCheck(std::span<const double> weights,
                                               std::span<const double> theta,
                                               int trials, int mc_runs,
                                               std::uint64_t seed);

// Exact law of the sampled rank for a target at global rank R, obtained by
// enumerating all (N - 1)^(n - 1) ordered with-replacement draws.
// Entry r - 1 is P(r). Limited to N <= 6, n <= 4.
std::vector<double> ExhaustiveSamplingLaw(int catalog_size, int sample_size,
                                          int rank);

}  // namespace sampest::oracle

#endif  // SAMPEST_ORACLE_H_
