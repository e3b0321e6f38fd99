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

#include "csdesign/linear_program.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "csdesign/errors.h"

namespace csdesign {
namespace {

enum class RunOutcome { kOptimal, kUnbounded, kPivotLimit };

// Dense tableau over [A | I] where the identity block holds one artificial
// variable per row.
class TableauSimplex {
 public:
  TableauSimplex(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const LpOptions& options)
      : options_(options),
        rows_(static_cast<int>(a.rows())),
        structural_(static_cast<int>(a.cols())),
        total_(structural_ + rows_) {
    full_.resize(rows_, total_);
    full_.leftCols(structural_) = a;
    full_.rightCols(rows_).setIdentity();
    rhs_ = b;
    for (int i = 0; i < rows_; ++i) {
      if (rhs_(i) < 0) {
        full_.row(i).head(structural_) *= -1.0;
        rhs_(i) = -rhs_(i);
      }
    }
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) basis_[i] = structural_ + i;
    tableau_.resize(rows_, total_ + 1);
    tableau_.leftCols(total_) = full_;
    tableau_.col(total_) = rhs_;
    allowed_.assign(total_, true);
    cost_ = Eigen::VectorXd::Zero(total_);
  }

  int pivots() const { return pivots_; }

  void SetPhaseOneCost() {
    cost_.setZero();
    cost_.tail(rows_).setOnes();
    std::fill(allowed_.begin(), allowed_.end(), true);
    RecomputeReducedCosts();
  }

  void SetPhaseTwoCost(const Eigen::VectorXd& c) {
    cost_.setZero();
    cost_.head(structural_) = c;
    for (int j = 0; j < total_; ++j) allowed_[j] = j < structural_;
    cost_scale_ = std::max(1.0, c.cwiseAbs().maxCoeff());
    RecomputeReducedCosts();
  }

  double Objective() const {
    double value = 0.0;
    for (int i = 0; i < rows_; ++i) {
      value += cost_(basis_[i]) * tableau_(i, total_);
    }
    return value;
  }

  RunOutcome Run(int max_pivots) {
    int degenerate_run = 0;
    int refactors_without_progress = 0;
    const double reduced_tol = options_.tolerance * cost_scale_;
    while (true) {
      const int entering = ChooseEntering(
          reduced_tol,
          degenerate_run >= options_.degenerate_pivots_before_bland);
      if (entering < 0) {
        // Confirm against a fresh factorization before declaring optimality.
        Refactor();
        if (ChooseEntering(reduced_tol, false) < 0 ||
            ++refactors_without_progress > 3) {
          return RunOutcome::kOptimal;
        }
        continue;
      }
      const int leaving = ChooseLeaving(entering);
      if (leaving < 0) return RunOutcome::kUnbounded;
      if (pivots_ >= max_pivots) return RunOutcome::kPivotLimit;
      const double step =
          tableau_(leaving, total_) / tableau_(leaving, entering);
      degenerate_run = step <= 1e-14 * RhsScale() ? degenerate_run + 1 : 0;
      Pivot(leaving, entering);
      refactors_without_progress = 0;
      if (pivots_ % 200 == 0) Refactor();
    }
  }

  // Pivots basic artificial variables out of the basis where possible. Rows
  // without any usable structural entry are redundant constraints; their
  // artificial stays basic at zero and can never re-enter.
  void DriveOutArtificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) continue;
      int best = -1;
      double best_abs = 1e-9;
      for (int j = 0; j < structural_; ++j) {
        const double v = std::abs(tableau_(i, j));
        if (v > best_abs) {
          best_abs = v;
          best = j;
        }
      }
      if (best >= 0) Pivot(i, best);
    }
  }

  Eigen::VectorXd StructuralSolution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(structural_);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) {
        x(basis_[i]) = std::max(tableau_(i, total_), 0.0);
      }
    }
    return x;
  }

  double RhsScale() const {
    return std::max(1.0, rhs_.size() ? rhs_.cwiseAbs().maxCoeff() : 0.0);
  }

 private:
  int ChooseEntering(double reduced_tol, bool bland) const {
    int best = -1;
    double best_value = -reduced_tol;
    for (int j = 0; j < total_; ++j) {
      if (!allowed_[j] || is_basic(j)) continue;
      if (reduced_(j) < best_value) {
        best = j;
        if (bland) break;
        best_value = reduced_(j);
      }
    }
    return best;
  }

  int ChooseLeaving(int entering) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double pivot = tableau_(i, entering);
      if (pivot <= options_.pivot_tolerance) continue;
      const double ratio = std::max(tableau_(i, total_), 0.0) / pivot;
      if (best < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio) ||
          (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio) &&
           basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  bool is_basic(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void Pivot(int row, int col) {
    const double pivot = tableau_(row, col);
    tableau_.row(row) /= pivot;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const double factor = tableau_(i, col);
      if (factor != 0.0) tableau_.row(i) -= factor * tableau_.row(row);
    }
    const double rfactor = reduced_(col);
    if (rfactor != 0.0) {
      reduced_ -= rfactor * tableau_.row(row).head(total_).transpose();
    }
    basis_[row] = col;
    ++pivots_;
  }

  void Refactor() {
    Eigen::MatrixXd basis_matrix(rows_, rows_);
    for (int i = 0; i < rows_; ++i) basis_matrix.col(i) = full_.col(basis_[i]);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis_matrix);
    if (!qr.isInvertible()) return;
    tableau_.leftCols(total_) = qr.solve(full_);
    tableau_.col(total_) = qr.solve(rhs_);
    for (int i = 0; i < rows_; ++i) {
      tableau_(i, basis_[i]) = 1.0;
    }
    RecomputeReducedCosts();
  }

  void RecomputeReducedCosts() {
    Eigen::VectorXd basic_cost(rows_);
    for (int i = 0; i < rows_; ++i) basic_cost(i) = cost_(basis_[i]);
    reduced_ = cost_ - tableau_.leftCols(total_).transpose() * basic_cost;
    for (int i = 0; i < rows_; ++i) reduced_(basis_[i]) = 0.0;
  }

  LpOptions options_;
  int rows_;
  int structural_;
  int total_;
  Eigen::MatrixXd full_;
  Eigen::VectorXd rhs_;
  Eigen::MatrixXd tableau_;
  Eigen::VectorXd cost_;
  Eigen::VectorXd reduced_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
  double cost_scale_ = 1.0;
  int pivots_ = 0;
};

}  // namespace

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kMaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

LpResult SolveStandardFormLp(const Eigen::MatrixXd& a,
                             const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c,
                             const LpOptions& options) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw InvalidArgumentError("LP dimensions disagree");
  }
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) {
    throw InvalidArgumentError("LP data must be finite");
  }
  const int max_pivots = options.max_pivots > 0
                             ? options.max_pivots
                             : 50 * static_cast<int>(a.rows() + a.cols());
  LpResult result;
  result.x = Eigen::VectorXd::Zero(a.cols());

  TableauSimplex simplex(a, b, options);
  simplex.SetPhaseOneCost();
  RunOutcome outcome = simplex.Run(max_pivots);
  result.pivots = simplex.pivots();
  if (outcome == RunOutcome::kPivotLimit) {
    result.status = LpStatus::kMaxIterations;
    return result;
  }
  if (simplex.Objective() >
      options.feasibility_tolerance * simplex.RhsScale()) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  simplex.DriveOutArtificials();

  simplex.SetPhaseTwoCost(c);
  outcome = simplex.Run(max_pivots);
  result.pivots = simplex.pivots();
  result.x = simplex.StructuralSolution();
  result.objective = c.dot(result.x);
  switch (outcome) {
    case RunOutcome::kOptimal:
      result.status = LpStatus::kOptimal;
      break;
    case RunOutcome::kUnbounded:
      result.status = LpStatus::kUnbounded;
      break;
    case RunOutcome::kPivotLimit:
      result.status = LpStatus::kMaxIterations;
      break;
  }
  return result;
}

}  // namespace csdesign
