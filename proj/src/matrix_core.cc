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

#include "csdesign/matrix_core.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "csdesign/errors.h"

namespace csdesign {
namespace {

void CheckFinite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidArgumentError(std::string(what) + " has non-finite entries");
  }
}

}  // namespace

Dictionary::Dictionary(Eigen::MatrixXd data) : data_(std::move(data)) {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw InvalidArgumentError("dictionary must be at least 1 x 1");
  }
  CheckFinite(data_, "dictionary");
  for (int j = 0; j < data_.cols(); ++j) {
    if (data_.col(j).norm() <= kZeroColumnNorm) {
      throw ZeroColumnError(j, "dictionary");
    }
  }
}

ProjectionMatrix::ProjectionMatrix(Eigen::MatrixXd data)
    : data_(std::move(data)) {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw InvalidArgumentError("projection matrix must be at least 1 x 1");
  }
  CheckFinite(data_, "projection matrix");
}

GramMatrix::GramMatrix(Eigen::MatrixXd data) : data_(std::move(data)) {
  if (data_.rows() != data_.cols()) {
    throw InvalidArgumentError("Gram matrix must be square");
  }
  CheckFinite(data_, "Gram matrix");
  const double scale = std::max(data_.cwiseAbs().maxCoeff(), 1e-12);
  if ((data_ - data_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgumentError("Gram matrix is not symmetric");
  }
}

EffectiveDictionary::EffectiveDictionary(const ProjectionMatrix& projection,
                                         const Dictionary& dictionary) {
  if (projection.signal_dim() != dictionary.signal_dim()) {
    throw InvalidArgumentError("projection and dictionary sizes disagree");
  }
  data_ = projection.matrix() * dictionary.matrix();
}

Eigen::MatrixXd NormalizeColumns(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    const double norm = m.col(j).norm();
    if (!(norm > kZeroColumnNorm)) throw ZeroColumnError(j);
    out.col(j) = m.col(j) / norm;
  }
  return out;
}

GramMatrix Gram(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd normalized = NormalizeColumns(m);
  Eigen::MatrixXd g = normalized.transpose() * normalized;
  // Exact symmetry and unit diagonal.
  g = (0.5 * (g + g.transpose())).eval();
  g.diagonal().setOnes();
  return GramMatrix(std::move(g));
}

SymmetricEigen SortedSymmetricEigen(const Eigen::MatrixXd& g) {
  if (g.rows() != g.cols()) {
    throw InvalidArgumentError("eigendecomposition needs a square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  if (solver.info() != Eigen::Success) {
    throw Error("symmetric eigendecomposition did not converge");
  }
  const int k = static_cast<int>(g.rows());
  SymmetricEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      const double v = out.vectors(i, j);
      if (std::abs(v) > 1e-12) {
        if (v < 0) out.vectors.col(j) *= -1.0;
        break;
      }
    }
  }
  return out;
}

Eigen::MatrixXd SymmetricRankTruncate(const Eigen::MatrixXd& g, int rank) {
  if (rank < 1 || rank > g.rows()) {
    throw InvalidRankError("rank " + std::to_string(rank) +
                           " outside [1, " + std::to_string(g.rows()) + "]");
  }
  const SymmetricEigen eig = SortedSymmetricEigen(g);
  const Eigen::VectorXd kept = eig.values.head(rank).cwiseMax(0.0);
  const auto basis = eig.vectors.leftCols(rank);
  Eigen::MatrixXd out = basis * kept.asDiagonal() * basis.transpose();
  return 0.5 * (out + out.transpose());
}

Eigen::MatrixXd SqrtFactor(const Eigen::MatrixXd& g, int rank) {
  if (rank < 1) throw InvalidRankError("rank must be positive");
  const int k = static_cast<int>(g.rows());
  const SymmetricEigen eig = SortedSymmetricEigen(g);
  const double scale = std::max(std::abs(eig.values(0)), 1e-12);
  const int retained = std::min(rank, k);
  if (eig.values(retained - 1) < -1e-8 * scale) {
    throw NotPsdError("retained eigenvalue " +
                      std::to_string(eig.values(retained - 1)) +
                      " is negative");
  }
  if (retained < k && eig.values(retained) > 1e-8 * scale) {
    throw InvalidRankError("matrix rank exceeds " + std::to_string(rank));
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(rank, k);
  for (int i = 0; i < retained; ++i) {
    s.row(i) = std::sqrt(std::max(eig.values(i), 0.0)) *
               eig.vectors.col(i).transpose();
  }
  return s;
}

LeastSquaresProjector::LeastSquaresProjector(const Dictionary& dictionary)
    : signal_dim_(dictionary.signal_dim()) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(
      dictionary.matrix());
  pseudo_inverse_ = cod.pseudoInverse();
}

ProjectionMatrix LeastSquaresProjector::Solve(
    const Eigen::MatrixXd& target) const {
  if (target.cols() != pseudo_inverse_.rows()) {
    throw InvalidArgumentError("target has " + std::to_string(target.cols()) +
                               " columns, dictionary has " +
                               std::to_string(pseudo_inverse_.rows()) +
                               " atoms");
  }
  return ProjectionMatrix(target * pseudo_inverse_);
}

ProjectionMatrix LsqProjection(const Eigen::MatrixXd& target,
                               const Dictionary& dictionary) {
  return LeastSquaresProjector(dictionary).Solve(target);
}

double MaxOffDiagonal(const Eigen::MatrixXd& g) {
  double best = 0.0;
  for (int j = 0; j < g.cols(); ++j) {
    for (int i = 0; i < j; ++i) {
      best = std::max(best, std::abs(g(i, j)));
    }
  }
  return best;
}

}  // namespace csdesign
