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

#ifndef CSDESIGN_SAPIRO_H_
#define CSDESIGN_SAPIRO_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "csdesign/matrix_core.h"

namespace csdesign {

// Spectral data of D D^T = V diag(lambda) V^T plus the current Gamma = P V.
struct SapiroState {
  Eigen::MatrixXd v;       // n x n orthogonal
  Eigen::VectorXd lambda;  // non-increasing, >= 0
  Eigen::MatrixXd gamma;   // m x n
  int zero_eigenvalues = 0;
};

// Eigendecomposition of D D^T; eigenvalues at or below 1e-10 * lambda_1 are
// clamped to 0 and counted. Throws DegenerateSpectrumError when
// lambda_1 <= 1e-12.
SapiroState ComputeSapiroSpectrum(const Dictionary& dictionary);

// ||Lambda - Lambda Gamma^T Gamma Lambda||_F^2 with Lambda = diag(lambda).
double SapiroObjective(const Eigen::VectorXd& lambda,
                       const Eigen::MatrixXd& gamma);

struct SapiroResult {
  ProjectionMatrix projection;
  SapiroState state;
  double initial_objective = 0.0;
  // Objective after each of the m row updates.
  std::vector<double> trace;
};

// One pass of m rank-one updates. Row j of Gamma is replaced so that
// Lambda tau_j matches the dominant eigenpair of
// E_j = Lambda - sum_{i != j} (Lambda tau_i)(Lambda tau_i)^T; components on
// zero eigenvalues keep their initial values. Gamma_0 = P_0 V with P_0
// Gaussian from `seed`; P = Gamma V^T. Requires 1 <= m <= n.
SapiroResult SapiroOptimize(const Dictionary& dictionary, int m,
                            uint64_t seed);

// CSV with header `step,objective`.
void WriteSapiroTraceCsv(std::ostream& out, const std::vector<double>& trace);

}  // namespace csdesign

#endif  // CSDESIGN_SAPIRO_H_
