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

#include "sampest/estimators.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sampest {
namespace {

// Pivots below this fraction of the largest diagonal entry are treated as a
// failed factorization (numerically singular system).
constexpr double kMinRelativePivot = 1e-14;
constexpr double kRidgeScale = 1e-10;

Eigen::Map<const Eigen::VectorXd> AsVector(std::span<const double> v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

Eigen::Map<const Eigen::VectorXd> AsVector(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

void CheckPrior(const RankPmf& prior, const ConditionalMatrix& cond) {
  prior.Validate();
  if (prior.size() != cond.catalog_size()) {
    throw std::invalid_argument(
        "prior length " + std::to_string(prior.size()) +
        " does not match the conditional matrix (" +
        std::to_string(cond.catalog_size()) + " ranks)");
  }
}

bool Factorize(const Eigen::MatrixXd& matrix,
               Eigen::LLT<Eigen::MatrixXd>& llt) {
  llt.compute(matrix);
  if (llt.info() != Eigen::Success) return false;
  const double max_diag = matrix.diagonal().cwiseAbs().maxCoeff();
  const Eigen::VectorXd pivots = llt.matrixL().toDenseMatrix().diagonal();
  const double min_pivot_sq = pivots.cwiseAbs2().minCoeff();
  return std::isfinite(min_pivot_sq) &&
         min_pivot_sq > kMinRelativePivot * max_diag;
}

std::string Diagnostics(const Eigen::MatrixXd& matrix) {
  std::ostringstream os;
  os << "n=" << matrix.rows() << " trace=" << matrix.trace()
     << " min_diag=" << matrix.diagonal().minCoeff()
     << " max_diag=" << matrix.diagonal().maxCoeff();
  return os.str();
}

// A'D, i.e. each column R of A' scaled by P(R).
Eigen::MatrixXd WeightedDesignTranspose(const RankPmf& prior,
                                        const ConditionalMatrix& cond) {
  const Eigen::VectorXd weights = AsVector(prior.probs);
  return cond.entries().transpose() * weights.asDiagonal();
}

AdjustedMetric SolveWith(const Eigen::LLT<Eigen::MatrixXd>& llt,
                         const Eigen::MatrixXd& weighted_design_t,
                         std::span<const double> target) {
  if (static_cast<Eigen::Index>(target.size()) != weighted_design_t.cols()) {
    throw std::invalid_argument("target length does not match catalog size");
  }
  const Eigen::VectorXd rhs = weighted_design_t * AsVector(target);
  const Eigen::VectorXd x = llt.solve(rhs);
  return AdjustedMetric{std::vector<double>(x.data(), x.data() + x.size())};
}

}  // namespace

void LsProblem::Validate() const {
  CheckPrior(prior, cond);
  if (static_cast<std::int64_t>(target.size()) != cond.catalog_size()) {
    throw std::invalid_argument("target length does not match catalog size");
  }
  if (user_count < 1) {
    throw std::invalid_argument("user count M must be >= 1");
  }
}

LsProblem MakeLsProblem(RankPmf prior, ConditionalMatrix cond,
                        const MetricSpec& spec, std::int64_t user_count) {
  spec.Validate();
  std::vector<double> target =
      TruncatedMetricVector(spec, cond.catalog_size());
  LsProblem problem{std::move(prior), std::move(cond), std::move(target),
                    user_count};
  problem.Validate();
  return problem;
}

MnSolver::MnSolver(const RankPmf& prior, const ConditionalMatrix& cond,
                   std::int64_t user_count) {
  CheckPrior(prior, cond);
  if (user_count < 1) {
    throw std::invalid_argument("user count M must be >= 1");
  }
  const Eigen::MatrixXd& a = cond.entries();
  weighted_design_t_ = WeightedDesignTranspose(prior, cond);
  const double inv_m = 1.0 / static_cast<double>(user_count);

  Eigen::MatrixXd gram(a.cols(), a.cols());
  gram.setZero();
  gram.selfadjointView<Eigen::Lower>().rankUpdate(a.transpose());
  gram = gram.selfadjointView<Eigen::Lower>();

  system_ = weighted_design_t_ * a - inv_m * gram;
  system_.diagonal() += inv_m * a.colwise().sum().transpose();
  // Symmetrize against rounding in the two products.
  system_ = 0.5 * (system_ + system_.transpose()).eval();

  if (Factorize(system_, llt_)) return;
  const double ridge =
      kRidgeScale * system_.trace() / static_cast<double>(system_.rows());
  Eigen::MatrixXd ridged = system_;
  ridged.diagonal().array() += ridge;
  if (!Factorize(ridged, llt_)) {
    throw std::runtime_error("MN system is not positive definite even with "
                             "ridge " + std::to_string(ridge) + ": " +
                             Diagnostics(system_));
  }
  used_ridge_ = true;
}

AdjustedMetric MnSolver::Solve(std::span<const double> target) const {
  return SolveWith(llt_, weighted_design_t_, target);
}

BvSolver::BvSolver(const RankPmf& prior, const ConditionalMatrix& cond,
                   double gamma) {
  CheckPrior(prior, cond);
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("BV gamma must lie in [0, 1]");
  }
  const Eigen::MatrixXd& a = cond.entries();
  weighted_design_t_ = WeightedDesignTranspose(prior, cond);
  // A~'A~ = A'DA and c = A'D 1.
  system_ = (1.0 - gamma) * (weighted_design_t_ * a);
  system_.diagonal() += gamma * weighted_design_t_.rowwise().sum();
  system_ = 0.5 * (system_ + system_.transpose()).eval();
  if (!Factorize(system_, llt_)) {
    throw std::runtime_error("BV system is singular (gamma=" +
                             std::to_string(gamma) + "): " +
                             Diagnostics(system_));
  }
}

AdjustedMetric BvSolver::Solve(std::span<const double> target) const {
  return SolveWith(llt_, weighted_design_t_, target);
}

AdjustedMetric SolveMn(const LsProblem& problem) {
  problem.Validate();
  return MnSolver(problem.prior, problem.cond, problem.user_count)
      .Solve(problem.target);
}

AdjustedMetric SolveBv(const LsProblem& problem, double gamma) {
  problem.Validate();
  return BvSolver(problem.prior, problem.cond, gamma).Solve(problem.target);
}

ObjectiveValue EvalObjective(const AdjustedMetric& x,
                             const LsProblem& problem) {
  problem.Validate();
  const Eigen::MatrixXd& a = problem.cond.entries();
  if (x.size() != a.cols()) {
    throw std::invalid_argument("adjusted metric length does not match n");
  }
  const auto xv = AsVector(x.values);
  const Eigen::VectorXd ax = a * xv;
  const Eigen::VectorXd residual = ax - AsVector(problem.target);
  const Eigen::VectorXd lambda = a.colwise().sum().transpose();

  ObjectiveValue out;
  out.bias = (AsVector(problem.prior.probs).array() * residual.array().square())
                 .sum();
  out.variance = ((lambda.array() * xv.array().square()).sum() -
                  ax.squaredNorm()) /
                 static_cast<double>(problem.user_count);
  out.total = out.bias + out.variance;
  return out;
}

double EvalBvObjective(const AdjustedMetric& x, const LsProblem& problem,
                       double gamma) {
  problem.Validate();
  const Eigen::MatrixXd& a = problem.cond.entries();
  if (x.size() != a.cols()) {
    throw std::invalid_argument("adjusted metric length does not match n");
  }
  const auto xv = AsVector(x.values);
  const auto p = AsVector(problem.prior.probs);
  const Eigen::VectorXd ax = a * xv;
  const Eigen::VectorXd second_moment = a * xv.cwiseAbs2();
  const double bias =
      (p.array() * (ax - AsVector(problem.target)).array().square()).sum();
  const double variance =
      (p.array() * (second_moment.array() - ax.array().square())).sum();
  return bias + gamma * variance;
}

double EstimateWithAdjusted(std::span<const SampleRecord> samples,
                            std::int64_t catalog_size, const MetricSpec& spec,
                            const RankPmf& prior, LsMethod method,
                            double gamma, bool exact_mode) {
  if (samples.empty()) {
    throw std::invalid_argument("estimator needs at least one sample");
  }
  spec.Validate();
  const std::int64_t n = samples.front().sample_size;
  const SampledPmf sampled = EmpiricalSampledPmf(samples, n);
  const ConditionalMatrix cond = MakeConditionalMatrix(n, catalog_size,
                                                       exact_mode);
  const std::vector<double> target = TruncatedMetricVector(spec, catalog_size);
  const auto user_count = static_cast<std::int64_t>(samples.size());
  const AdjustedMetric x =
      method == LsMethod::kMn
          ? MnSolver(prior, cond, user_count).Solve(target)
          : BvSolver(prior, cond, gamma).Solve(target);
  return ApplyAdjustedMetric(x, sampled);
}

}  // namespace sampest
