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

#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include "gtest/gtest.h"

#include "csdesign/random.h"

namespace csdesign {
namespace {

// Brute force over all bases: the optimum of a bounded feasible standard
// form LP is attained at a basic feasible solution.
std::optional<double> VertexOracle(const Eigen::MatrixXd& a,
                                   const Eigen::VectorXd& b,
                                   const Eigen::VectorXd& c) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::optional<double> best;
  std::vector<int> cols(m);
  for (int i = 0; i < m; ++i) cols[i] = i;
  while (true) {
    Eigen::MatrixXd basis(m, m);
    for (int i = 0; i < m; ++i) basis.col(i) = a.col(cols[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.isInvertible()) {
      const Eigen::VectorXd xb = lu.solve(b);
      if (xb.minCoeff() >= -1e-10) {
        double obj = 0.0;
        for (int i = 0; i < m; ++i) obj += c(cols[i]) * xb(i);
        if (!best || obj < *best) best = obj;
      }
    }
    int i = m - 1;
    while (i >= 0 && cols[i] == n - m + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
  }
  return best;
}

TEST(SolveStandardFormLp, TinyKnownOptimum) {
  // min x0 + 2 x1 s.t. x0 + x1 + x2 = 1, x0 - x1 = 0.
  Eigen::MatrixXd a(2, 3);
  a << 1, 1, 1, 1, -1, 0;
  const LpResult r =
      SolveStandardFormLp(a, Eigen::Vector2d(1, 0), Eigen::Vector3d(1, 2, 0));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-12);
  EXPECT_NEAR(r.x(2), 1.0, 1e-12);
}

TEST(SolveStandardFormLp, NegativeRightHandSide) {
  // min x0 s.t. -x0 + x1 = -2: x0 >= 2.
  Eigen::MatrixXd a(1, 2);
  a << -1, 1;
  const LpResult r = SolveStandardFormLp(a, Eigen::VectorXd::Constant(1, -2.0),
                                         Eigen::Vector2d(1, 0));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(SolveStandardFormLp, Infeasible) {
  Eigen::MatrixXd a(1, 2);
  a << 1, 1;
  const LpResult r = SolveStandardFormLp(a, Eigen::VectorXd::Constant(1, -1.0),
                                         Eigen::Vector2d(1, 1));
  EXPECT_EQ(r.status, LpStatus::kInfeasible);
}

TEST(SolveStandardFormLp, Unbounded) {
  Eigen::MatrixXd a(1, 2);
  a << 1, -1;
  const LpResult r = SolveStandardFormLp(a, Eigen::VectorXd::Zero(1),
                                         Eigen::Vector2d(-1, 0));
  EXPECT_EQ(r.status, LpStatus::kUnbounded);
}

TEST(SolveStandardFormLp, RedundantRows) {
  Eigen::MatrixXd a(3, 3);
  a << 1, 1, 0, 0, 1, 1, 1, 2, 1;
  const Eigen::Vector3d b(1, 1, 2);
  const LpResult r = SolveStandardFormLp(a, b, Eigen::Vector3d(1, 0, 1));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-10);
  EXPECT_LE((a * r.x - b).norm(), 1e-9);
}

TEST(SolveStandardFormLp, MatchesVertexEnumeration) {
  int checked = 0;
  for (uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 2 + static_cast<int>(seed % 3);
    const int n = m + 2 + static_cast<int>(seed % 5);
    Rng rng(seed);
    const Eigen::MatrixXd a = GaussianMatrix(m, n, rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::VectorXd x0(n), c(n);
    for (int j = 0; j < n; ++j) {
      x0(j) = u(rng) < 0.5 ? 0.0 : u(rng);
      c(j) = u(rng) - (seed % 2 ? 0.0 : 0.3);
    }
    const Eigen::VectorXd b = a * x0;
    const std::optional<double> oracle = VertexOracle(a, b, c);
    const LpResult r = SolveStandardFormLp(a, b, c);
    ASSERT_TRUE(oracle.has_value());
    if (r.status == LpStatus::kUnbounded) continue;
    ASSERT_EQ(r.status, LpStatus::kOptimal) << seed;
    EXPECT_NEAR(r.objective, *oracle, 1e-8 * std::max(1.0, std::abs(*oracle)))
        << seed;
    EXPECT_LE((a * r.x - b).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_GE(r.x.minCoeff(), -1e-12);
    EXPECT_NEAR(c.dot(r.x), r.objective, 1e-10);
    ++checked;
  }
  EXPECT_GT(checked, 90);
}

TEST(SolveStandardFormLp, DegenerateProblemTerminates) {
  // Many ties in the ratio test: b = 0 with a feasible cone.
  const Eigen::MatrixXd a = GaussianMatrix(6, 20, uint64_t{3});
  Eigen::VectorXd c = Eigen::VectorXd::Ones(20);
  const LpResult r = SolveStandardFormLp(a, Eigen::VectorXd::Zero(6), c);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-12);
}

TEST(SolveStandardFormLp, Deterministic) {
  const Eigen::MatrixXd a = GaussianMatrix(8, 30, uint64_t{4});
  const Eigen::VectorXd b = a * Eigen::VectorXd::Ones(30);
  const Eigen::VectorXd c = GaussianMatrix(30, 1, uint64_t{5}).cwiseAbs();
  const LpResult r1 = SolveStandardFormLp(a, b, c);
  const LpResult r2 = SolveStandardFormLp(a, b, c);
  EXPECT_EQ(r1.x, r2.x);
  EXPECT_EQ(r1.pivots, r2.pivots);
}

TEST(LpStatusName, Names) {
  EXPECT_STREQ(LpStatusName(LpStatus::kOptimal), "optimal");
  EXPECT_STREQ(LpStatusName(LpStatus::kInfeasible), "infeasible");
}

}  // namespace
}  // namespace csdesign
