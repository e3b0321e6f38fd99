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

#ifndef CSDESIGN_PURSUIT_H_
#define CSDESIGN_PURSUIT_H_

#include <vector>

#include <Eigen/Core>

namespace csdesign {

// A length-k coefficient vector together with its sorted support.
struct SparseVector {
  Eigen::VectorXd values;
  std::vector<int> support;

  // Support is every index with a nonzero value.
  static SparseVector FromDense(Eigen::VectorXd values);
};

enum class RecoveryStatus { kConverged, kMaxIter, kInfeasible };

const char* RecoveryStatusName(RecoveryStatus status);

struct RecoveryResult {
  SparseVector theta;
  // ||y - Dhat * theta||_2, recomputed from the returned coefficients.
  double residual_norm = 0.0;
  // OMP iterations, simplex pivots or supports examined.
  int iterations = 0;
  RecoveryStatus status = RecoveryStatus::kConverged;
};

// 1e-9 * ||y||_2.
double DefaultResidualTolerance(const Eigen::VectorXd& y);
inline constexpr double kDefaultLpTolerance = 1e-7;

// Orthogonal matching pursuit. Each step adds the column maximizing
// |<d_j, r>| / ||d_j|| (smallest index on ties) and re-solves least squares
// on the support. Stops when the support holds `sparsity` atoms
// (kMaxIter unless the residual is within tolerance) or when
// ||r|| <= residual_tol (kConverged). kInfeasible means no remaining column
// correlates with the residual.
RecoveryResult Omp(const Eigen::MatrixXd& dhat, const Eigen::VectorXd& y,
                   int sparsity, double residual_tol);

// min ||theta||_1 s.t. Dhat theta = y, solved as the LP over theta = u - v,
// u, v >= 0. The result is kConverged only when Dhat theta matches y and
// ||theta||_1 matches the LP objective, both to lp_tol * max(1, ||y||_inf).
RecoveryResult BasisPursuit(const Eigen::MatrixXd& dhat,
                            const Eigen::VectorXd& y,
                            double lp_tol = kDefaultLpTolerance);

struct ExhaustiveResult {
  RecoveryResult recovery;
  // Exactly one distinct solution exists at the minimal support size.
  bool unique = false;
  int fitting_supports = 0;
};

// Sum over s <= max_sparsity of C(k, s).
double SupportCount(int k, int max_sparsity);
inline constexpr double kMaxExhaustiveSupports = 1e6;

// Brute-force min ||theta||_0 s.t. Dhat theta = y: supports are enumerated
// by increasing size (lexicographically within a size) and the first size
// whose least-squares residual is <= tol is returned. Throws TooLargeError
// past kMaxExhaustiveSupports and NotFoundError when no support fits.
ExhaustiveResult ExhaustiveSparsest(const Eigen::MatrixXd& dhat,
                                    const Eigen::VectorXd& y,
                                    int max_sparsity, double tol);

// Least-squares coefficients on the given columns (minimum-norm when the
// subdictionary is rank deficient), scattered into a length-k vector.
Eigen::VectorXd LeastSquaresOnSupport(const Eigen::MatrixXd& dhat,
                                      const Eigen::VectorXd& y,
                                      const std::vector<int>& support);

}  // namespace csdesign

#endif  // CSDESIGN_PURSUIT_H_
