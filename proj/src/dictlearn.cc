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

#include "csdesign/dictlearn.h"

#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/pursuit.h"
#include "csdesign/random.h"

namespace csdesign {
namespace {

struct RankOne {
  Eigen::VectorXd u;
  double sigma = 0.0;
  Eigen::VectorXd v;
};

RankOne DominantPair(const Eigen::MatrixXd& e) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU |
                                            Eigen::ComputeThinV);
  return {svd.matrixU().col(0), svd.singularValues()(0),
          svd.matrixV().col(0)};
}

std::vector<int> AtomUsers(const Eigen::MatrixXd& theta, int j) {
  std::vector<int> users;
  for (int i = 0; i < theta.cols(); ++i) {
    if (theta(j, i) != 0.0) users.push_back(i);
  }
  return users;
}

// Restricted error E_j = X_w - D Theta_w + d_j theta_j,w on the users w.
Eigen::MatrixXd RestrictedError(const Eigen::MatrixXd& x,
                                const Eigen::MatrixXd& d,
                                const Eigen::MatrixXd& theta, int j,
                                const std::vector<int>& users) {
  Eigen::MatrixXd e(x.rows(), users.size());
  for (size_t c = 0; c < users.size(); ++c) {
    const int i = users[c];
    e.col(c) = x.col(i) - d * theta.col(i) + d.col(j) * theta(j, i);
  }
  return e;
}

bool ShouldStop(double previous, double current, double min_improvement) {
  if (min_improvement <= 0.0) return false;
  if (current <= 1e-300) return true;
  return previous - current < min_improvement * previous;
}

}  // namespace

Eigen::MatrixXd SparseCode(const Eigen::MatrixXd& d, const Eigen::MatrixXd& x,
                           int sparsity) {
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(d.cols(), x.cols());
  for (int i = 0; i < x.cols(); ++i) {
    const Eigen::VectorXd signal = x.col(i);
    theta.col(i) =
        Omp(d, signal, sparsity, DefaultResidualTolerance(signal)).theta.values;
  }
  return theta;
}

Eigen::MatrixXd RandomUnitDictionary(int n, int k, uint64_t seed) {
  return NormalizeColumns(GaussianMatrix(n, k, seed));
}

int WorstRepresentedColumn(const Eigen::MatrixXd& residual,
                           const std::vector<bool>& taken) {
  int best = -1;
  double best_norm = 0.0;
  for (int i = 0; i < residual.cols(); ++i) {
    if (taken[i]) continue;
    const double norm = residual.col(i).squaredNorm();
    if (norm > best_norm) {
      best = i;
      best_norm = norm;
    }
  }
  return best;
}

bool UpdateAtom(const Eigen::MatrixXd& x, Eigen::MatrixXd& d,
                Eigen::MatrixXd& theta, int j) {
  const std::vector<int> users = AtomUsers(theta, j);
  if (users.empty()) return false;
  const RankOne fit = DominantPair(RestrictedError(x, d, theta, j, users));
  d.col(j) = fit.u;
  for (size_t c = 0; c < users.size(); ++c) {
    theta(j, users[c]) = fit.sigma * fit.v(c);
  }
  return true;
}

int KsvdAtomSweep(const Eigen::MatrixXd& x, Eigen::MatrixXd& d,
                  Eigen::MatrixXd& theta) {
  std::vector<bool> taken(x.cols(), false);
  int replaced = 0;
  for (int j = 0; j < d.cols(); ++j) {
    if (UpdateAtom(x, d, theta, j)) continue;
    const int worst = WorstRepresentedColumn(x - d * theta, taken);
    if (worst < 0 || x.col(worst).norm() <= kZeroColumnNorm) continue;
    taken[worst] = true;
    d.col(j) = x.col(worst).normalized();
    ++replaced;
  }
  return replaced;
}

KsvdResult Ksvd(const Eigen::MatrixXd& x, const KsvdOptions& options) {
  if (options.atoms < 1 || options.sparsity < 1 || options.iterations < 1) {
    throw InvalidArgumentError(
        "ksvd: atoms, sparsity and iterations must be >= 1");
  }
  if (x.cols() < 1 || x.rows() < 1) {
    throw InvalidArgumentError("ksvd: training set is empty");
  }
  Eigen::MatrixXd d =
      RandomUnitDictionary(static_cast<int>(x.rows()), options.atoms,
                           options.seed);
  Eigen::MatrixXd theta;
  std::vector<KsvdTraceEntry> trace;
  for (int iter = 0; iter < options.iterations; ++iter) {
    theta = SparseCode(d, x, options.sparsity);
    KsvdTraceEntry entry;
    entry.replaced_atoms = KsvdAtomSweep(x, d, theta);
    entry.objective = (x - d * theta).squaredNorm();
    trace.push_back(entry);
    if (trace.size() > 1 &&
        ShouldStop(trace[trace.size() - 2].objective, entry.objective,
                   options.min_relative_improvement)) {
      break;
    }
  }
  return {Dictionary(std::move(d)), std::move(theta), std::move(trace)};
}

StackedAtomSolver::StackedAtomSolver(const Eigen::MatrixXd& p, double lambda) {
  const int n = static_cast<int>(p.cols());
  stacking_.resize(n + p.rows(), n);
  stacking_.topRows(n) = lambda * Eigen::MatrixXd::Identity(n, n);
  stacking_.bottomRows(p.rows()) = p;
  Eigen::MatrixXd normal = p.transpose() * p;
  normal.diagonal().array() += lambda * lambda;
  const Eigen::VectorXd eig =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(normal,
                                                     Eigen::EigenvaluesOnly)
          .eigenvalues();
  const double largest = std::max(eig.maxCoeff(), 0.0);
  if (!(eig.minCoeff() > 1e-12 * std::max(largest, 1e-12))) {
    throw SingularSystemError(
        "lambda^2 I + P^T P is singular (lambda = " + FormatDouble(lambda) +
        ")");
  }
  normal_.compute(normal);
}

Eigen::VectorXd StackedAtomSolver::Solve(
    const Eigen::VectorXd& stacked) const {
  if (stacked.size() != stacking_.rows()) {
    throw InvalidArgumentError("stacked atom has the wrong length");
  }
  return normal_.solve(stacking_.transpose() * stacked);
}

void CoupledConfig::Validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidArgumentError("coupled: lambda must lie in [0, 1]");
  }
  if (sparsity < 1 || atoms < 1 || max_outer_iterations < 1) {
    throw InvalidArgumentError(
        "coupled: sparsity, atoms and iterations must be >= 1");
  }
}

CoupledResult CoupledKsvd(const TrainingSet& training,
                          const CoupledConfig& cfg) {
  cfg.Validate();
  const Eigen::MatrixXd& x = training.x;
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  const int m = DesignMeasurements(cfg.projection);
  if (n < 1 || p < 1) {
    throw InvalidArgumentError("coupled: training set is empty");
  }
  if (training.y &&
      (training.y->cols() != p || training.y->rows() != m)) {
    throw InvalidArgumentError("coupled: Y must be " + std::to_string(m) +
                               " x " + std::to_string(p));
  }
  Eigen::MatrixXd noise;
  if (!training.y) {
    noise = training.noise_sigma *
            GaussianMatrix(m, p, DeriveSeed(cfg.seed, "coupled-noise"));
  }

  Eigen::MatrixXd d = RandomUnitDictionary(
      n, cfg.atoms, DeriveSeed(cfg.seed, "coupled-dictionary"));
  Eigen::MatrixXd theta;
  std::optional<ProjectionMatrix> projection;
  std::vector<CoupledTraceEntry> trace;
  for (int iter = 0; iter < cfg.max_outer_iterations; ++iter) {
    projection = DesignProjection(Dictionary(d), cfg.projection);
    const Eigen::MatrixXd& pm = projection->matrix();
    const StackedAtomSolver solver(pm, cfg.lambda);
    const Eigen::MatrixXd& w = solver.stacking();
    const Eigen::MatrixXd y = training.y ? *training.y : pm * x + noise;
    Eigen::MatrixXd z(n + m, p);
    z.topRows(n) = cfg.lambda * x;
    z.bottomRows(m) = y;

    Eigen::MatrixXd stacked_d = w * d;
    theta = SparseCode(stacked_d, z, cfg.sparsity);

    CoupledTraceEntry entry;
    std::vector<bool> taken(p, false);
    for (int j = 0; j < cfg.atoms; ++j) {
      const std::vector<int> users = AtomUsers(theta, j);
      bool refit = false;
      if (!users.empty()) {
        const RankOne fit =
            DominantPair(RestrictedError(z, stacked_d, theta, j, users));
        Eigen::VectorXd atom = solver.Solve(fit.u);
        const double norm = atom.norm();
        if (norm > kZeroColumnNorm) {
          for (size_t c = 0; c < users.size(); ++c) {
            theta(j, users[c]) = fit.sigma * fit.v(c) * norm;
          }
          d.col(j) = atom / norm;
          refit = true;
        } else {
          for (int i : users) theta(j, i) = 0.0;
        }
      }
      if (!refit) {
        const int worst = WorstRepresentedColumn(z - stacked_d * theta, taken);
        if (worst >= 0 && x.col(worst).norm() > kZeroColumnNorm) {
          taken[worst] = true;
          d.col(j) = x.col(worst).normalized();
          ++entry.replaced_atoms;
        }
      }
      stacked_d.col(j) = w * d.col(j);
    }

    entry.term1 = (x - d * theta).squaredNorm();
    entry.term2 = (y - pm * d * theta).squaredNorm();
    entry.combined = (z - stacked_d * theta).squaredNorm();
    trace.push_back(entry);
    if (trace.size() > 1 &&
        ShouldStop(trace[trace.size() - 2].combined, entry.combined,
                   cfg.min_relative_improvement)) {
      break;
    }
  }
  return {std::move(*projection), Dictionary(std::move(d)), std::move(theta),
          std::move(trace)};
}

void WriteKsvdTraceCsv(std::ostream& out,
                       const std::vector<KsvdTraceEntry>& trace) {
  out << "iter,objective,replaced_atoms\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ',' << FormatDouble(trace[i].objective) << ','
        << trace[i].replaced_atoms << '\n';
  }
}

void WriteCoupledTraceCsv(std::ostream& out,
                          const std::vector<CoupledTraceEntry>& trace) {
  out << "iter,term1,term2\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ',' << FormatDouble(trace[i].term1) << ','
        << FormatDouble(trace[i].term2) << '\n';
  }
}

}  // namespace csdesign
