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

#ifndef CSDESIGN_DICTLEARN_H_
#define CSDESIGN_DICTLEARN_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Cholesky>

#include "csdesign/matrix_core.h"
#include "csdesign/projection_design.h"

namespace csdesign {

struct TrainingSet {
  Eigen::MatrixXd x;  // n x p training signals
  // m x p measurements. When absent, Coupled-KSVD synthesizes
  // Y = P_q X + noise_sigma * N with N drawn once from the seed.
  std::optional<Eigen::MatrixXd> y;
  double noise_sigma = 0.0;
};

struct KsvdOptions {
  int atoms = 1;
  int sparsity = 1;
  int iterations = 50;
  uint64_t seed = 0;
  // Stop once an outer iteration improves the objective by less than this
  // fraction; 0 disables the rule.
  double min_relative_improvement = 1e-6;
};

struct KsvdTraceEntry {
  double objective = 0.0;  // ||X - D Theta||_F^2 after the atom sweep
  int replaced_atoms = 0;  // unused atoms re-seeded during the sweep
};

struct KsvdResult {
  Dictionary dictionary;
  Eigen::MatrixXd theta;  // k x p
  std::vector<KsvdTraceEntry> trace;
};

// Column-by-column OMP of x against d with the given sparsity.
Eigen::MatrixXd SparseCode(const Eigen::MatrixXd& d, const Eigen::MatrixXd& x,
                           int sparsity);

// Random Gaussian dictionary with unit-norm columns.
Eigen::MatrixXd RandomUnitDictionary(int n, int k, uint64_t seed);

// Index of the column of `residual` with the largest norm, skipping columns
// flagged in `taken`; -1 when every column is taken or zero.
int WorstRepresentedColumn(const Eigen::MatrixXd& residual,
                           const std::vector<bool>& taken);

// Rank-one refit of atom j on the signals that use it: the restricted error
// E_j is replaced by its dominant singular pair, d_j = u_1 and the nonzero
// entries of row j of theta become sigma_1 * v_1. Returns false, leaving
// everything unchanged, when no signal uses atom j.
bool UpdateAtom(const Eigen::MatrixXd& x, Eigen::MatrixXd& d,
                Eigen::MatrixXd& theta, int j);

// One K-SVD atom sweep over all atoms with theta's support held fixed.
// Unused atoms are replaced by the normalized worst-represented training
// column. Returns the number of replaced atoms.
int KsvdAtomSweep(const Eigen::MatrixXd& x, Eigen::MatrixXd& d,
                  Eigen::MatrixXd& theta);

KsvdResult Ksvd(const Eigen::MatrixXd& x, const KsvdOptions& options);

// Solves the stacked system [lambda I; P] d = d_tilde in the least-squares
// sense, d = (lambda^2 I + P^T P)^{-1} [lambda I, P^T] d_tilde.
class StackedAtomSolver {
 public:
  // Throws SingularSystemError when lambda^2 I + P^T P is numerically
  // singular.
  StackedAtomSolver(const Eigen::MatrixXd& p, double lambda);

  Eigen::VectorXd Solve(const Eigen::VectorXd& stacked) const;
  // [lambda I; P]
  const Eigen::MatrixXd& stacking() const { return stacking_; }

 private:
  Eigen::MatrixXd stacking_;
  Eigen::LDLT<Eigen::MatrixXd> normal_;
};

struct CoupledConfig {
  double lambda = 0.5;
  int sparsity = 1;
  int atoms = 1;
  int max_outer_iterations = 10;
  // Optimizer used for P on each outer iteration; also fixes m.
  ProjectionDesign projection = SapiroConfig{};
  uint64_t seed = 0;
  double min_relative_improvement = 1e-6;

  void Validate() const;
};

struct CoupledTraceEntry {
  double term1 = 0.0;  // ||X - D Theta||_F^2
  double term2 = 0.0;  // ||Y - P D Theta||_F^2
  // ||Z - W D Theta||_F^2 = lambda^2 term1 + term2 for the stacking used.
  double combined = 0.0;
  int replaced_atoms = 0;
};

struct CoupledResult {
  ProjectionMatrix projection;
  Dictionary dictionary;
  Eigen::MatrixXd theta;
  std::vector<CoupledTraceEntry> trace;
};

// Joint learning of P and D. Each outer iteration designs P for the current
// D, sparse-codes the stacked data Z = [lambda X; Y] against W D with
// W = [lambda I; P], refits each atom on the stacked problem and maps it
// back through StackedAtomSolver, then rescales the atom to unit norm and
// its coefficient row by the removed norm.
CoupledResult CoupledKsvd(const TrainingSet& training,
                          const CoupledConfig& cfg);

// CSV with header `iter,objective,replaced_atoms`.
void WriteKsvdTraceCsv(std::ostream& out,
                       const std::vector<KsvdTraceEntry>& trace);
// CSV with header `iter,term1,term2`.
void WriteCoupledTraceCsv(std::ostream& out,
                          const std::vector<CoupledTraceEntry>& trace);

}  // namespace csdesign

#endif  // CSDESIGN_DICTLEARN_H_
