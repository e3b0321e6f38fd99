// Copyright 2026 The csdesign Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csdesign/pursuit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "csdesign/errors.h"
#include "csdesign/linear_program.h"

namespace csdesign {
namespace {

RecoveryResult Finish(const Eigen::MatrixXd& dhat, const Eigen::VectorXd& y,
                      Eigen::VectorXd theta, int iterations,
                      RecoveryStatus status) {
  RecoveryResult result;
  result.residual_norm = (y - dhat * theta).norm();
  result.theta = SparseVector::FromDense(std::move(theta));
  result.iterations = iterations;
  result.status = status;
  return result;
}

void CheckShapes(const Eigen::MatrixXd& dhat, const Eigen::VectorXd& y) {
  if (dhat.rows() != y.size()) {
    throw InvalidArgumentError("measurement length " +
                               std::to_string(y.size()) +
                               " does not match dictionary rows " +
                               std::to_string(dhat.rows()));
  }
}

// Advances `indices` to the next k-combination of [0, n) in lexicographic
// order; returns false after the last one.
bool NextCombination(std::vector<int>& indices, int n) {
  const int k = static_cast<int>(indices.size());
  int i = k - 1;
  while (i >= 0 && indices[i] == n - k + i) --i;
  if (i < 0) return false;
  ++indices[i];
  for (int j = i + 1; j < k; ++j) indices[j] = indices[j - 1] + 1;
  return true;
}

}  // namespace

SparseVector SparseVector::FromDense(Eigen::VectorXd values) {
  SparseVector out;
  out.values = std::move(values);
  for (int i = 0; i < out.values.size(); ++i) {
    if (out.values(i) != 0.0) out.support.push_back(i);
  }
  return out;
}

const char* RecoveryStatusName(RecoveryStatus status) {
  switch (status) {
    case RecoveryStatus::kConverged:
      return "converged";
    case RecoveryStatus::kMaxIter:
      return "max_iter";
    case RecoveryStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

double DefaultResidualTolerance(const Eigen::VectorXd& y) {
  return 1e-9 * y.norm();
}

Eigen::VectorXd LeastSquaresOnSupport(const Eigen::MatrixXd& dhat,
                                      const Eigen::VectorXd& y,
                                      const std::vector<int>& support) {
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(dhat.cols());
  if (support.empty()) return theta;
  Eigen::MatrixXd sub(dhat.rows(), support.size());
  for (size_t s = 0; s < support.size(); ++s) sub.col(s) = dhat.col(support[s]);
  const Eigen::VectorXd coeffs =
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(sub).solve(y);
  for (size_t s = 0; s < support.size(); ++s) theta(support[s]) = coeffs(s);
  return theta;
}

RecoveryResult Omp(const Eigen::MatrixXd& dhat, const Eigen::VectorXd& y,
                   int sparsity, double residual_tol) {
  CheckShapes(dhat, y);
  if (sparsity < 0) throw InvalidArgumentError("sparsity must be >= 0");
  const int k = static_cast<int>(dhat.cols());
  const Eigen::VectorXd norms = dhat.colwise().norm().transpose();
  for (int j = 0; j < k; ++j) {
    if (!(norms(j) > 0.0)) throw ZeroColumnError(j, "omp dictionary");
  }

  std::vector<int> support;
  std::vector<bool> selected(k, false);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd residual = y;
  int iterations = 0;
  const int budget = std::min(sparsity, k);
  while (static_cast<int>(support.size()) < budget &&
         residual.norm() > residual_tol) {
    const Eigen::VectorXd correlation =
        (dhat.transpose() * residual).cwiseAbs().cwiseQuotient(norms);
    int best = -1;
    double best_value = 0.0;
    for (int j = 0; j < k; ++j) {
      if (!selected[j] && correlation(j) > best_value) {
        best = j;
        best_value = correlation(j);
      }
    }
    if (best < 0 || best_value <= 1e-14 * residual.norm()) {
      return Finish(dhat, y, std::move(theta), iterations,
                    RecoveryStatus::kInfeasible);
    }
    selected[best] = true;
    support.insert(std::upper_bound(support.begin(), support.end(), best),
                   best);
    theta = LeastSquaresOnSupport(dhat, y, support);
    residual = y - dhat * theta;
    ++iterations;
  }
  const RecoveryStatus status = residual.norm() <= residual_tol
                                    ? RecoveryStatus::kConverged
                                    : RecoveryStatus::kMaxIter;
  return Finish(dhat, y, std::move(theta), iterations, status);
}

RecoveryResult BasisPursuit(const Eigen::MatrixXd& dhat,
                            const Eigen::VectorXd& y, double lp_tol) {
  CheckShapes(dhat, y);
  const int k = static_cast<int>(dhat.cols());
  Eigen::MatrixXd split(dhat.rows(), 2 * k);
  split.leftCols(k) = dhat;
  split.rightCols(k) = -dhat;
  const Eigen::VectorXd cost = Eigen::VectorXd::Ones(2 * k);
  const LpResult lp = SolveStandardFormLp(split, y, cost);

  Eigen::VectorXd theta = lp.x.head(k) - lp.x.tail(k);
  switch (lp.status) {
    case LpStatus::kOptimal:
      break;
    case LpStatus::kMaxIterations:
      return Finish(dhat, y, std::move(theta), lp.pivots,
                    RecoveryStatus::kMaxIter);
    case LpStatus::kInfeasible:
    case LpStatus::kUnbounded:
      return Finish(dhat, y, std::move(theta), lp.pivots,
                    RecoveryStatus::kInfeasible);
  }
  const double scale =
      std::max(1.0, y.size() ? y.cwiseAbs().maxCoeff() : 0.0);
  const double constraint_gap = (dhat * theta - y).cwiseAbs().maxCoeff();
  const double objective_gap = std::abs(theta.lpNorm<1>() - lp.objective);
  const RecoveryStatus status =
      constraint_gap <= lp_tol * scale && objective_gap <= lp_tol * scale
          ? RecoveryStatus::kConverged
          : RecoveryStatus::kInfeasible;
  return Finish(dhat, y, std::move(theta), lp.pivots, status);
}

double SupportCount(int k, int max_sparsity) {
  double total = 0.0;
  double binom = 1.0;
  for (int s = 0; s <= std::min(max_sparsity, k); ++s) {
    total += binom;
    binom = binom * (k - s) / (s + 1);
  }
  return total;
}

ExhaustiveResult ExhaustiveSparsest(const Eigen::MatrixXd& dhat,
                                    const Eigen::VectorXd& y,
                                    int max_sparsity, double tol) {
  CheckShapes(dhat, y);
  const int k = static_cast<int>(dhat.cols());
  if (max_sparsity < 0) throw InvalidArgumentError("max sparsity must be >= 0");
  if (SupportCount(k, max_sparsity) > kMaxExhaustiveSupports) {
    throw TooLargeError("enumerating supports up to size " +
                        std::to_string(max_sparsity) + " over " +
                        std::to_string(k) + " atoms is too large");
  }
  int examined = 0;
  for (int size = 0; size <= std::min(max_sparsity, k); ++size) {
    std::vector<int> support(size);
    for (int i = 0; i < size; ++i) support[i] = i;
    std::vector<Eigen::VectorXd> solutions;
    int fitting = 0;
    do {
      ++examined;
      Eigen::VectorXd theta = LeastSquaresOnSupport(dhat, y, support);
      if ((y - dhat * theta).norm() > tol) continue;
      ++fitting;
      const bool seen = std::any_of(
          solutions.begin(), solutions.end(), [&](const Eigen::VectorXd& s) {
            return (s - theta).cwiseAbs().maxCoeff() <= std::max(tol, 1e-12);
          });
      if (!seen) solutions.push_back(std::move(theta));
    } while (size > 0 && NextCombination(support, k));
    if (!solutions.empty()) {
      ExhaustiveResult result;
      result.recovery = Finish(dhat, y, solutions.front(), examined,
                               RecoveryStatus::kConverged);
      result.unique = solutions.size() == 1;
      result.fitting_supports = fitting;
      return result;
    }
  }
  throw NotFoundError("no support of size <= " + std::to_string(max_sparsity) +
                      " reproduces y within " + std::to_string(tol));
}

}  // namespace csdesign
