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

#ifndef CSDESIGN_MATRIX_CORE_H_
#define CSDESIGN_MATRIX_CORE_H_

#include <Eigen/Core>

namespace csdesign {

// Columns whose Euclidean norm is at or below this value are treated as zero.
inline constexpr double kZeroColumnNorm = 1e-12;

// A dense n x k dictionary whose columns (atoms) are all nonzero and finite.
class Dictionary {
 public:
  // Throws ZeroColumnError or InvalidArgumentError on invalid data.
  explicit Dictionary(Eigen::MatrixXd data);

  const Eigen::MatrixXd& matrix() const { return data_; }
  int signal_dim() const { return static_cast<int>(data_.rows()); }
  int num_atoms() const { return static_cast<int>(data_.cols()); }

 private:
  Eigen::MatrixXd data_;
};

// A dense m x n sensing matrix.
class ProjectionMatrix {
 public:
  explicit ProjectionMatrix(Eigen::MatrixXd data);

  const Eigen::MatrixXd& matrix() const { return data_; }
  int num_measurements() const { return static_cast<int>(data_.rows()); }
  int signal_dim() const { return static_cast<int>(data_.cols()); }

 private:
  Eigen::MatrixXd data_;
};

// A symmetric k x k matrix of pairwise atom correlations.
class GramMatrix {
 public:
  // Throws InvalidArgumentError unless data is square and symmetric to
  // 1e-12 relative to its largest entry.
  explicit GramMatrix(Eigen::MatrixXd data);

  const Eigen::MatrixXd& matrix() const { return data_; }
  int size() const { return static_cast<int>(data_.rows()); }

 private:
  Eigen::MatrixXd data_;
};

// The m x k product P * D seen by the pursuit solvers.
class EffectiveDictionary {
 public:
  EffectiveDictionary(const ProjectionMatrix& projection,
                      const Dictionary& dictionary);

  const Eigen::MatrixXd& matrix() const { return data_; }

 private:
  Eigen::MatrixXd data_;
};

// Scales every column to unit Euclidean norm. Throws ZeroColumnError.
Eigen::MatrixXd NormalizeColumns(const Eigen::MatrixXd& m);

// Gram matrix of the column-normalized input. Throws ZeroColumnError.
GramMatrix Gram(const Eigen::MatrixXd& m);

// Eigenpairs of a symmetric matrix, eigenvalues in non-increasing order. Each
// eigenvector has its first nonzero component positive.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};
SymmetricEigen SortedSymmetricEigen(const Eigen::MatrixXd& g);

// Keeps the `rank` algebraically largest eigenpairs of g and clamps retained
// negative eigenvalues to zero, giving a PSD matrix of rank <= `rank`.
// Throws InvalidRankError unless 1 <= rank <= g.rows().
Eigen::MatrixXd SymmetricRankTruncate(const Eigen::MatrixXd& g, int rank);

// Returns S (rank x k) with S^T S = g, built as Lambda^{1/2} V^T from the top
// eigenpairs. Throws NotPsdError if a retained eigenvalue is below
// -1e-8 * lambda_max, and InvalidRankError if g has more than `rank`
// eigenvalues above 1e-8 * lambda_max.
Eigen::MatrixXd SqrtFactor(const Eigen::MatrixXd& g, int rank);

// Solves min_P ||S - P D||_F through the pseudoinverse of D. The
// pseudoinverse is computed once so that repeated solves against the same
// dictionary are cheap.
class LeastSquaresProjector {
 public:
  explicit LeastSquaresProjector(const Dictionary& dictionary);

  ProjectionMatrix Solve(const Eigen::MatrixXd& target) const;

 private:
  int signal_dim_;
  Eigen::MatrixXd pseudo_inverse_;  // k x n
};

// One-shot form of LeastSquaresProjector.
ProjectionMatrix LsqProjection(const Eigen::MatrixXd& target,
                               const Dictionary& dictionary);

// Largest off-diagonal magnitude of a square matrix (0 for 1 x 1).
double MaxOffDiagonal(const Eigen::MatrixXd& g);

}  // namespace csdesign

#endif  // CSDESIGN_MATRIX_CORE_H_
