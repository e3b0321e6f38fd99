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

#include "csdesign/altproj.h"

#include <cmath>
#include <ostream>
#include <string>

#include "csdesign/coherence.h"
#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/random.h"

namespace csdesign {

void AltProjConfig::Validate() const {
  if (!(t > 0.0 && t < 1.0)) {
    throw InvalidArgumentError("altproj: t must lie in (0, 1)");
  }
  if (m < 1) throw InvalidArgumentError("altproj: m must be >= 1");
  if (iterations < 1) {
    throw InvalidArgumentError("altproj: iterations must be >= 1");
  }
}

Eigen::MatrixXd ProjectConvex(const Eigen::MatrixXd& g, double t) {
  Eigen::MatrixXd out = g;
  for (int j = 0; j < g.cols(); ++j) {
    for (int i = 0; i < g.rows(); ++i) {
      if (i == j) {
        if (g(i, i) < 1.0) out(i, i) = 1.0;
      } else if (std::abs(g(i, j)) > t) {
        out(i, j) = std::copysign(t, g(i, j));
      }
    }
  }
  return out;
}

Eigen::MatrixXd ProjectRank(const Eigen::MatrixXd& g, int m) {
  return SymmetricRankTruncate(g, m);
}

GramMatrix NormalizeGram(const Eigen::MatrixXd& g) {
  if (g.rows() != g.cols()) {
    throw InvalidArgumentError("Gram matrix must be square");
  }
  Eigen::VectorXd scale(g.rows());
  for (int i = 0; i < g.rows(); ++i) {
    if (!(g(i, i) > 1e-12)) throw DegenerateDiagonalError(i);
    scale(i) = 1.0 / std::sqrt(g(i, i));
  }
  Eigen::MatrixXd out = scale.asDiagonal() * g * scale.asDiagonal();
  out = (0.5 * (out + out.transpose())).eval();
  out.diagonal().setOnes();
  return GramMatrix(std::move(out));
}

ProjectionMatrix RecoverProjection(const GramMatrix& g,
                                   const Dictionary& dictionary, int m) {
  if (g.size() != dictionary.num_atoms()) {
    throw InvalidArgumentError("Gram size " + std::to_string(g.size()) +
                               " does not match " +
                               std::to_string(dictionary.num_atoms()) +
                               " atoms");
  }
  const Eigen::MatrixXd root = SqrtFactor(g.matrix(), m);
  return LsqProjection(root, dictionary);
}

Eigen::MatrixXd InitialAltProjGram(int k, uint64_t seed) {
  const Eigen::MatrixXd a = GaussianMatrix(k, k, seed);
  Eigen::MatrixXd g = 0.5 * (a + a.transpose());
  g.diagonal().setOnes();
  return g;
}

AltProjResult AltProjOptimize(const Dictionary& dictionary,
                              const AltProjConfig& cfg) {
  cfg.Validate();
  const int k = dictionary.num_atoms();
  if (cfg.m > k) {
    throw InvalidRankError("altproj: m exceeds the number of atoms");
  }
  Eigen::MatrixXd g = InitialAltProjGram(k, cfg.seed);
  std::vector<AltProjTraceEntry> trace;
  trace.reserve(cfg.iterations);
  for (int iter = 0; iter < cfg.iterations; ++iter) {
    g = ProjectRank(ProjectConvex(g, cfg.t), cfg.m);
    const GramMatrix normalized = NormalizeGram(g);
    trace.push_back({MaxOffDiagonal(normalized.matrix()),
                     TryTAverageCoherence(normalized, cfg.t)});
  }
  GramMatrix normalized = NormalizeGram(g);
  ProjectionMatrix projection =
      RecoverProjection(normalized, dictionary, cfg.m);
  return {std::move(projection), std::move(normalized), std::move(trace)};
}

void WriteAltProjTraceCsv(std::ostream& out,
                          const std::vector<AltProjTraceEntry>& trace) {
  out << "iter,max_offdiag,mu_t\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    const AltProjTraceEntry& e = trace[i];
    out << (i + 1) << ',' << FormatDouble(e.max_offdiag) << ','
        << (e.mu_t ? FormatDouble(*e.mu_t) : "") << '\n';
  }
}

}  // namespace csdesign
