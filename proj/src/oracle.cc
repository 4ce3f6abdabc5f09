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

#include "sampest/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace sampest::oracle {

std::vector<double> DenseSolve(Matrix matrix, std::vector<double> rhs) {
  const std::size_t n = matrix.size();
  if (n == 0 || n > 8 || rhs.size() != n) {
    throw std::invalid_argument("DenseSolve expects a square system, n <= 8");
  }
  double scale = 0.0;
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(matrix[row][col]) > std::abs(matrix[pivot][col])) {
        pivot = row;
      }
    }
    if (std::abs(matrix[pivot][col]) <= 1e-14 * scale) {
      throw std::runtime_error("DenseSolve: singular matrix");
    }
    std::swap(matrix[col], matrix[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = matrix[row][col] / matrix[col][col];
      for (std::size_t k = col; k < n; ++k) {
        matrix[row][k] -= factor * matrix[col][k];
      }
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= matrix[i][k] * x[k];
    x[i] = acc / matrix[i][i];
  }
  return x;
}

double ObservationProbability(int sampled_rank, int sample_size, int rank,
                              int catalog_size) {
  const int trials = sample_size - 1;
  const int above = sampled_rank - 1;
  const double theta =
      static_cast<double>(rank - 1) / static_cast<double>(catalog_size - 1);
  // C(trials, above) as a running product.
  double coef = 1.0;
  for (int i = 1; i <= above; ++i) {
    coef = coef * static_cast<double>(trials - above + i) / i;
  }
  double p = coef;
  for (int i = 0; i < above; ++i) p *= theta;
  for (int i = 0; i < trials - above; ++i) p *= (1.0 - theta);
  return p;
}

Matrix BinomialConditional(int sample_size, int catalog_size) {
  Matrix cond(catalog_size, std::vector<double>(sample_size, 0.0));
  for (int rank = 1; rank <= catalog_size; ++rank) {
    for (int r = 1; r <= sample_size; ++r) {
      cond[rank - 1][r - 1] =
          ObservationProbability(r, sample_size, rank, catalog_size);
    }
  }
  return cond;
}

NormalEquations MnNormalEquations(const Matrix& cond,
                                  std::span<const double> prior,
                                  std::span<const double> target,
                                  double users) {
  const std::size_t n = cond.front().size();
  NormalEquations eq{Matrix(n, std::vector<double>(n, 0.0)),
                     std::vector<double>(n, 0.0)};
  for (std::size_t rank = 0; rank < cond.size(); ++rank) {
    const auto& a = cond[rank];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        eq.matrix[i][j] += prior[rank] * a[i] * a[j] - a[i] * a[j] / users;
      }
      eq.matrix[i][i] += a[i] / users;
      eq.rhs[i] += prior[rank] * target[rank] * a[i];
    }
  }
  return eq;
}

NormalEquations BvNormalEquations(const Matrix& cond,
                                  std::span<const double> prior,
                                  std::span<const double> target,
                                  double gamma) {
  const std::size_t n = cond.front().size();
  NormalEquations eq{Matrix(n, std::vector<double>(n, 0.0)),
                     std::vector<double>(n, 0.0)};
  for (std::size_t rank = 0; rank < cond.size(); ++rank) {
    const auto& a = cond[rank];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        eq.matrix[i][j] += (1.0 - gamma) * prior[rank] * a[i] * a[j];
      }
      eq.matrix[i][i] += gamma * prior[rank] * a[i];
      eq.rhs[i] += prior[rank] * target[rank] * a[i];
    }
  }
  return eq;
}

double MixtureLogLikelihood(std::span<const Observation> observations,
                            std::span<const double> pmf, int catalog_size) {
  double total = 0.0;
  for (const auto& obs : observations) {
    double density = 0.0;
    for (int rank = 1; rank <= catalog_size; ++rank) {
      density += pmf[rank - 1] * ObservationProbability(obs.sampled_rank,
                                                        obs.sample_size, rank,
                                                        catalog_size);
    }
    total += std::log(density);
  }
  return total;
}

GridMle SimplexGridMle(std::span<const Observation> observations,
                       int catalog_size, double step) {
  if (catalog_size < 2 || catalog_size > 4) {
    throw std::invalid_argument("SimplexGridMle supports 2 <= N <= 4");
  }
  if (!(step > 0.0) || step > 0.01) {
    throw std::invalid_argument("SimplexGridMle needs 0 < step <= 0.01");
  }
  const int units = static_cast<int>(std::lround(1.0 / step));

  // Collapse identical observations and tabulate their likelihoods.
  std::map<std::pair<int, int>, int> counts;
  for (const auto& obs : observations) {
    ++counts[{obs.sampled_rank, obs.sample_size}];
  }
  std::vector<double> weight;
  std::vector<std::vector<double>> table;
  for (const auto& [key, count] : counts) {
    weight.push_back(count);
    std::vector<double> row(catalog_size);
    for (int rank = 1; rank <= catalog_size; ++rank) {
      row[rank - 1] =
          ObservationProbability(key.first, key.second, rank, catalog_size);
    }
    table.push_back(std::move(row));
  }

  GridMle best;
  best.log_likelihood = -std::numeric_limits<double>::infinity();
  std::vector<int> parts(catalog_size, 0);
  std::vector<double> point(catalog_size, 0.0);

  auto score = [&]() {
    for (int k = 0; k < catalog_size; ++k) {
      point[k] = static_cast<double>(parts[k]) / units;
    }
    double ll = 0.0;
    for (std::size_t g = 0; g < table.size(); ++g) {
      double density = 0.0;
      for (int k = 0; k < catalog_size; ++k) density += point[k] * table[g][k];
      if (density <= 0.0) return;
      ll += weight[g] * std::log(density);
    }
    if (ll > best.log_likelihood) {
      best.log_likelihood = ll;
      best.pmf = point;
    }
  };

  // parts[0..N-2] enumerated, last coordinate takes the remainder.
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == catalog_size - 1) {
      parts[index] = remaining;
      score();
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  recurse(recurse, 0, units);
  return best;
}

bool VarianceCheck::WithinStandardErrors(double multiple) const {
  // The floor absorbs rounding when the weighted sum is constant.
  const double floor = 1e-9 * (1.0 + std::abs(analytic));
  return std::abs(analytic - empirical) <= multiple * standard_error + floor;
}

VarianceCheck WeightedMultinomialVarianceCheck(std::span<const double> weights,
                                               std::span<const double> theta,
                                               int trials, int mc_runs,
                                               std::uint64_t seed) {
  if (weights.size() != theta.size() || theta.empty()) {
    throw std::invalid_argument("weights and cell probabilities differ");
  }
  if (trials < 1 || mc_runs < 2) {
    throw std::invalid_argument("need trials >= 1 and mc_runs >= 2");
  }
  VarianceCheck out;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    first += weights[i] * theta[i];
    second += weights[i] * weights[i] * theta[i];
  }
  out.analytic = trials * (second - first * first);

  std::vector<double> cdf(theta.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    acc += theta[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, acc);
  std::vector<double> values(static_cast<std::size_t>(mc_runs));
  for (auto& value : values) {
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      const double u = unit(rng);
      std::size_t cell = 0;
      while (cell + 1 < cdf.size() && u >= cdf[cell]) ++cell;
      sum += weights[cell];
    }
    value = sum;
  }

  const double n = static_cast<double>(mc_runs);
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  out.empirical = m2 / (n - 1.0);
  const double mu4 = m4 / n;
  const double sigma2 = m2 / n;
  const double var_of_var =
      (mu4 - sigma2 * sigma2 * (n - 3.0) / (n - 1.0)) / n;
  out.standard_error = std::sqrt(std::max(0.0, var_of_var));
  return out;
}

std::vector<double> ExhaustiveSamplingLaw(int catalog_size, int sample_size,
                                          int rank) {
  if (catalog_size < 2 || catalog_size > 6 || sample_size < 2 ||
      sample_size > 4 || rank < 1 || rank > catalog_size) {
    throw std::invalid_argument(
        "ExhaustiveSamplingLaw supports N <= 6, n <= 4, 1 <= R <= N");
  }
  const int negatives = catalog_size - 1;
  const int draws = sample_size - 1;
  std::vector<long long> counts(sample_size, 0);
  long long sequences = 1;
  for (int i = 0; i < draws; ++i) sequences *= negatives;

  // Odometer over draw sequences; label j in 1..N-1, j < R ranks above.
  std::vector<int> labels(draws, 1);
  for (long long s = 0; s < sequences; ++s) {
    int above = 0;
    for (int label : labels) above += label < rank ? 1 : 0;
    ++counts[above];
    for (int pos = 0; pos < draws; ++pos) {
      if (++labels[pos] <= negatives) break;
      labels[pos] = 1;
    }
  }
  std::vector<double> law(sample_size);
  for (int r = 0; r < sample_size; ++r) {
    law[r] = static_cast<double>(counts[r]) / static_cast<double>(sequences);
  }
  return law;
}

}  // namespace sampest::oracle
