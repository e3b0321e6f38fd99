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
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include "gtest/gtest.h"

#include "csdesign/errors.h"
#include "csdesign/harness.h"
#include "csdesign/matrix_core.h"
#include "csdesign/random.h"
#include "test_frames.h"

namespace csdesign {
namespace {

Eigen::MatrixXd PlantedSignals(const Eigen::MatrixXd& d, int sparsity, int p,
                               uint64_t seed) {
  const Dictionary dict(d);
  Eigen::MatrixXd x(d.rows(), p);
  for (int i = 0; i < p; ++i) {
    x.col(i) = SynthesizeSignal(dict, sparsity, DeriveSeed(seed, "train", i)).x;
  }
  return x;
}

int NonZeros(const Eigen::MatrixXd& m) {
  return static_cast<int>((m.array() != 0.0).count());
}

TEST(SparseCode, UsesAtMostSparsityAtoms) {
  const Eigen::MatrixXd d = RandomUnitDictionary(6, 12, 1);
  const Eigen::MatrixXd x = GaussianMatrix(6, 20, uint64_t{2});
  const Eigen::MatrixXd theta = SparseCode(d, x, 3);
  for (int i = 0; i < 20; ++i) {
    EXPECT_LE((theta.col(i).array() != 0.0).count(), 3);
  }
}

TEST(RandomUnitDictionary, UnitColumns) {
  const Eigen::MatrixXd d = RandomUnitDictionary(5, 9, 3);
  for (int j = 0; j < 9; ++j) EXPECT_NEAR(d.col(j).norm(), 1.0, 1e-12);
}

TEST(UpdateAtom, RankOneRestrictedErrorIsReproduced) {
  Eigen::MatrixXd d = RandomUnitDictionary(6, 8, 4);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(8, 10);
  Rng rng(5);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 10; ++i) {
    theta((i + 1) % 8, i) = normal(rng);
    if (i % 2 == 0) theta(3, i) = normal(rng);
  }
  // Signals built with a different atom 3 than the dictionary holds.
  Eigen::MatrixXd truth = d;
  truth.col(3) = RandomUnitDictionary(6, 1, 6);
  const Eigen::MatrixXd x = truth * theta;
  const int support_before = NonZeros(theta.row(3));
  ASSERT_TRUE(UpdateAtom(x, d, theta, 3));
  EXPECT_NEAR(d.col(3).norm(), 1.0, 1e-10);
  EXPECT_LE(NonZeros(theta.row(3)), support_before);
  EXPECT_LE((x - d * theta).norm(), 1e-10 * x.norm());
}

TEST(UpdateAtom, UnusedAtomReportsFalse) {
  Eigen::MatrixXd d = RandomUnitDictionary(4, 5, 7);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(5, 3);
  theta(0, 0) = 1.0;
  EXPECT_FALSE(UpdateAtom(d * theta, d, theta, 2));
}

TEST(KsvdAtomSweep, NonIncreasingWithFixedCoding) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Eigen::MatrixXd x = GaussianMatrix(8, 60, seed);
    Eigen::MatrixXd d = RandomUnitDictionary(8, 12, seed + 100);
    Eigen::MatrixXd theta = SparseCode(d, x, 2);
    const double before = (x - d * theta).squaredNorm();
    const Eigen::MatrixXd theta_before = theta;
    const int replaced = KsvdAtomSweep(x, d, theta);
    if (replaced == 0) {
      EXPECT_LE((x - d * theta).squaredNorm(), before * (1.0 + 1e-12));
      // Supports can only shrink.
      EXPECT_TRUE(((theta.array() != 0.0) <= (theta_before.array() != 0.0)).all());
    }
    for (int j = 0; j < 12; ++j) EXPECT_NEAR(d.col(j).norm(), 1.0, 1e-10);
  }
}

TEST(KsvdAtomSweep, ReplacesUnusedAtomWithWorstColumn) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
  x << 1, 0, 0, 0, 2, 0, 0, 0, 3;
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(3, 2);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(2, 3);
  theta(0, 0) = 1.0;
  EXPECT_EQ(KsvdAtomSweep(x, d, theta), 1);
  EXPECT_EQ(d.col(1), Eigen::Vector3d(0, 0, 1));
}

TEST(WorstRepresentedColumn, SkipsTaken) {
  Eigen::MatrixXd r(1, 3);
  r << 1, 5, 3;
  EXPECT_EQ(WorstRepresentedColumn(r, {false, false, false}), 1);
  EXPECT_EQ(WorstRepresentedColumn(r, {false, true, false}), 2);
}

TEST(Ksvd, SingleIterationSmoke) {
  const Eigen::MatrixXd x = GaussianMatrix(6, 30, uint64_t{1});
  KsvdOptions o;
  o.atoms = 10;
  o.sparsity = 2;
  o.iterations = 1;
  const KsvdResult r = Ksvd(x, o);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_TRUE(std::isfinite(r.trace[0].objective));
  EXPECT_NEAR(r.trace[0].objective,
              (x - r.dictionary.matrix() * r.theta).squaredNorm(), 1e-9);
}

TEST(Ksvd, RejectsBadOptions) {
  KsvdOptions o;
  o.sparsity = 0;
  EXPECT_THROW(Ksvd(GaussianMatrix(3, 5, uint64_t{1}), o), InvalidArgumentError);
}

TEST(Ksvd, PlantedIncoherentDictionaryRecovered) {
  const Eigen::MatrixXd planted =
      NormalizeColumns(testing::LowCoherenceFrame(8, 16, 0.26, 1000));
  const Eigen::MatrixXd x = PlantedSignals(planted, 2, 400, 0);
  KsvdOptions o;
  o.atoms = 16;
  o.sparsity = 2;
  o.iterations = 50;
  o.seed = 0;
  const KsvdResult r = Ksvd(x, o);
  EXPECT_LE(r.trace.back().objective, 1e-6 * x.squaredNorm());
  // Every planted atom reappears up to sign.
  const Eigen::MatrixXd c =
      (r.dictionary.matrix().transpose() * planted).cwiseAbs();
  for (int j = 0; j < 16; ++j) EXPECT_GT(c.col(j).maxCoeff(), 1.0 - 1e-9);
}

TEST(Ksvd, Deterministic) {
  const Eigen::MatrixXd x = GaussianMatrix(6, 40, uint64_t{3});
  KsvdOptions o;
  o.atoms = 8;
  o.sparsity = 2;
  o.iterations = 5;
  o.seed = 4;
  EXPECT_EQ(Ksvd(x, o).dictionary.matrix(), Ksvd(x, o).dictionary.matrix());
}

TEST(StackedAtomSolver, RoundTrip) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Eigen::MatrixXd p = GaussianMatrix(4, 10, seed);
    const double lambda = 0.1 + 0.045 * seed;
    const StackedAtomSolver solver(p, lambda);
    const Eigen::VectorXd d = GaussianMatrix(10, 1, seed + 50);
    const Eigen::VectorXd stacked = solver.stacking() * d;
    EXPECT_LE((solver.Solve(stacked) - d).norm(), 1e-9 * d.norm()) << seed;
  }
}

TEST(StackedAtomSolver, DuplicatedStackingReducesToIdentity) {
  const StackedAtomSolver solver(Eigen::MatrixXd::Identity(5, 5), 1.0);
  const Eigen::VectorXd d = GaussianMatrix(5, 1, uint64_t{2});
  Eigen::VectorXd stacked(10);
  stacked << d, d;
  EXPECT_LE((solver.Solve(stacked) - d).norm(), 1e-12);
}

TEST(StackedAtomSolver, SingularWithoutSignalTerm) {
  EXPECT_THROW(StackedAtomSolver(GaussianMatrix(3, 6, uint64_t{1}), 0.0),
               SingularSystemError);
  EXPECT_NO_THROW(StackedAtomSolver(GaussianMatrix(6, 6, uint64_t{1}), 0.0));
}

TEST(CoupledConfig, Validate) {
  CoupledConfig c;
  c.lambda = 1.5;
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
  c.lambda = 0.5;
  c.sparsity = 0;
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
}

TEST(CoupledKsvd, CombinedObjectiveNonIncreasing) {
  int violations = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Eigen::MatrixXd planted = RandomUnitDictionary(20, 40, 500 + seed);
    TrainingSet t;
    t.x = PlantedSignals(planted, 3, 400, seed);
    t.noise_sigma = 0.01;
    CoupledConfig c;
    c.lambda = 0.5;
    c.sparsity = 3;
    c.atoms = 40;
    c.max_outer_iterations = 6;
    c.projection = SapiroConfig{8, seed};
    c.seed = seed;
    c.min_relative_improvement = 0.0;
    const CoupledResult r = CoupledKsvd(t, c);
    ASSERT_EQ(r.trace.size(), 6u);
    for (size_t i = 1; i < r.trace.size(); ++i) {
      const double prev = r.trace[i - 1].combined;
      if (r.trace[i].combined > prev + 1e-8 * prev) {
        ++violations;
        ADD_FAILURE() << "seed " << seed << " step " << i << ": " << prev
                      << " -> " << r.trace[i].combined;
      }
      EXPECT_NEAR(r.trace[i].combined,
                  c.lambda * c.lambda * r.trace[i].term1 + r.trace[i].term2,
                  1e-9 * r.trace[i].combined);
    }
    for (int j = 0; j < 40; ++j) {
      EXPECT_NEAR(r.dictionary.matrix().col(j).norm(), 1.0, 1e-10);
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(CoupledKsvd, ZeroLambdaIgnoresSignals) {
  const Eigen::MatrixXd planted = RandomUnitDictionary(6, 10, 3);
  TrainingSet t;
  t.x = PlantedSignals(planted, 2, 60, 1);
  t.y = GaussianMatrix(6, 6, uint64_t{9}) * t.x;
  CoupledConfig c;
  c.lambda = 0.0;
  c.sparsity = 2;
  c.atoms = 10;
  c.max_outer_iterations = 3;
  c.projection = SapiroConfig{6, 2};
  c.seed = 5;
  c.min_relative_improvement = 0.0;
  const CoupledResult a = CoupledKsvd(t, c);
  TrainingSet perturbed = t;
  perturbed.x += 0.5 * GaussianMatrix(6, 60, uint64_t{10});
  const CoupledResult b = CoupledKsvd(perturbed, c);
  EXPECT_EQ(a.theta, b.theta);
}

TEST(CoupledKsvd, RejectsMismatchedMeasurements) {
  TrainingSet t;
  t.x = GaussianMatrix(6, 20, uint64_t{1});
  t.y = GaussianMatrix(3, 19, uint64_t{2});
  CoupledConfig c;
  c.atoms = 8;
  c.projection = SapiroConfig{3, 1};
  EXPECT_THROW(CoupledKsvd(t, c), InvalidArgumentError);
}

TEST(TraceCsv, Formats) {
  std::stringstream a;
  WriteKsvdTraceCsv(a, {{2.5, 1}});
  EXPECT_EQ(a.str(), "iter,objective,replaced_atoms\n1,2.5,1\n");
  std::stringstream b;
  WriteCoupledTraceCsv(b, {{1.5, 0.25, 0.625, 0}});
  EXPECT_EQ(b.str(), "iter,term1,term2\n1,1.5,0.25\n");
}

}  // namespace
}  // namespace csdesign
