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

#include "csdesign/sapiro.h"

#include <cmath>
#include <ostream>
#include <string>

#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/random.h"

namespace csdesign {

SapiroState ComputeSapiroSpectrum(const Dictionary& dictionary) {
  const Eigen::MatrixXd& d = dictionary.matrix();
  const SymmetricEigen eig = SortedSymmetricEigen(d * d.transpose());
  const double largest = eig.values(0);
  if (!(largest > 1e-12)) {
    throw DegenerateSpectrumError("D D^T has no eigenvalue above 1e-12");
  }
  SapiroState state;
  state.v = eig.vectors;
  state.lambda = eig.values;
  for (int i = 0; i < state.lambda.size(); ++i) {
    if (state.lambda(i) <= 1e-10 * largest) {
      state.lambda(i) = 0.0;
      ++state.zero_eigenvalues;
    }
  }
  return state;
}

double SapiroObjective(const Eigen::VectorXd& lambda,
                       const Eigen::MatrixXd& gamma) {
  if (gamma.cols() != lambda.size()) {
    throw InvalidArgumentError("Gamma and Lambda sizes disagree");
  }
  // Rows of `scaled` are v_i = Lambda tau_i.
  const Eigen::MatrixXd scaled = gamma * lambda.asDiagonal();
  Eigen::MatrixXd error = -scaled.transpose() * scaled;
  error.diagonal() += lambda;
  return error.squaredNorm();
}

SapiroResult SapiroOptimize(const Dictionary& dictionary, int m,
                            uint64_t seed) {
  const int n = dictionary.signal_dim();
  if (m < 1 || m > n) {
    throw InvalidArgumentError("sapiro: m must lie in [1, " +
                               std::to_string(n) + "]");
  }
  SapiroState state = ComputeSapiroSpectrum(dictionary);
  const Eigen::VectorXd& lambda = state.lambda;
  const int active = n - state.zero_eigenvalues;

  state.gamma = GaussianMatrix(m, n, seed) * state.v;
  SapiroResult result{ProjectionMatrix(state.gamma * state.v.transpose()),
                      {}, SapiroObjective(lambda, state.gamma), {}};
  result.trace.reserve(m);

  // Rows are v_i = Lambda tau_i; kept in sync with state.gamma.
  Eigen::MatrixXd scaled = state.gamma * lambda.asDiagonal();
  for (int j = 0; j < m; ++j) {
    Eigen::MatrixXd residual = -scaled.transpose() * scaled;
    residual += scaled.row(j).transpose() * scaled.row(j);
    residual.diagonal() += lambda;
    const SymmetricEigen eig = SortedSymmetricEigen(residual);
    // E_j is indefinite in general; a non-positive top eigenvalue means the
    // best rank-one PSD correction is zero.
    const double xi = std::max(eig.values(0), 0.0);
    const Eigen::VectorXd target = std::sqrt(xi) * eig.vectors.col(0);
    for (int i = 0; i < active; ++i) {
      state.gamma(j, i) = target(i) / lambda(i);
      scaled(j, i) = lambda(i) * state.gamma(j, i);
    }
    result.trace.push_back(SapiroObjective(lambda, state.gamma));
  }
  result.projection = ProjectionMatrix(state.gamma * state.v.transpose());
  result.state = std::move(state);
  return result;
}

void WriteSapiroTraceCsv(std::ostream& out, const std::vector<double>& trace) {
  out << "step,objective\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ',' << FormatDouble(trace[i]) << '\n';
  }
}

}  // namespace csdesign
