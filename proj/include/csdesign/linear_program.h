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

#ifndef CSDESIGN_LINEAR_PROGRAM_H_
#define CSDESIGN_LINEAR_PROGRAM_H_

#include <Eigen/Core>

namespace csdesign {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kMaxIterations };

const char* LpStatusName(LpStatus status);

struct LpOptions {
  // Feasibility and reduced-cost tolerance, relative to the problem scale.
  double tolerance = 1e-9;
  // Phase-one objective above this (relative to max(1, |b|_inf)) means the
  // constraints are infeasible.
  double feasibility_tolerance = 1e-7;
  // Smallest admissible pivot magnitude in the ratio test.
  double pivot_tolerance = 1e-11;
  // 0 selects 50 * (rows + cols).
  int max_pivots = 0;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_pivots_before_bland = 50;
};

struct LpResult {
  LpStatus status = LpStatus::kMaxIterations;
  Eigen::VectorXd x;
  double objective = 0.0;
  int pivots = 0;
};

// Solves min c^T x s.t. A x = b, x >= 0 with a dense two-phase tableau
// simplex. Pivoting follows Dantzig's rule and falls back to Bland's rule
// while the objective stalls on degenerate vertices. At termination the
// basic solution and the reduced costs are recomputed from a fresh
// factorization of the basis; pivoting resumes if that check fails.
LpResult SolveStandardFormLp(const Eigen::MatrixXd& a,
                             const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c,
                             const LpOptions& options = {});

}  // namespace csdesign

#endif  // CSDESIGN_LINEAR_PROGRAM_H_
