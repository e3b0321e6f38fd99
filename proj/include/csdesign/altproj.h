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

#ifndef CSDESIGN_ALTPROJ_H_
#define CSDESIGN_ALTPROJ_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "csdesign/matrix_core.h"

namespace csdesign {

struct AltProjConfig {
  double t = 0.26;
  int m = 1;
  int iterations = 1000;
  uint64_t seed = 0;

  void Validate() const;
};

// Projection onto {|g_ij| <= t for i != j, g_ii >= 1}: off-diagonal entries
// are clipped to t * sign(g_ij) and diagonal entries below 1 are raised to 1.
Eigen::MatrixXd ProjectConvex(const Eigen::MatrixXd& g, double t);

// Projection onto PSD matrices of rank <= m (see SymmetricRankTruncate).
Eigen::MatrixXd ProjectRank(const Eigen::MatrixXd& g, int m);

// diag(g)^{-1/2} g diag(g)^{-1/2}. Throws DegenerateDiagonalError when a
// diagonal entry is <= 1e-12.
GramMatrix NormalizeGram(const Eigen::MatrixXd& g);

// Factors g = S^T S with S of m rows and returns the least-squares P with
// P D closest to S. Throws InvalidRankError when rank(g) > m.
ProjectionMatrix RecoverProjection(const GramMatrix& g,
                                   const Dictionary& dictionary, int m);

// Initial iterate: (A + A^T) / 2 for Gaussian A, with unit diagonal.
Eigen::MatrixXd InitialAltProjGram(int k, uint64_t seed);

struct AltProjTraceEntry {
  // Largest off-diagonal magnitude of the normalized iterate.
  double max_offdiag = 0.0;
  std::optional<double> mu_t;
};

struct AltProjResult {
  ProjectionMatrix projection;
  // Normalized final iterate handed to RecoverProjection.
  GramMatrix normalized_gram;
  std::vector<AltProjTraceEntry> trace;
};

// Alternates ProjectConvex and ProjectRank for cfg.iterations steps, then
// normalizes the iterate and recovers P from it.
AltProjResult AltProjOptimize(const Dictionary& dictionary,
                              const AltProjConfig& cfg);

// CSV with header `iter,max_offdiag,mu_t`.
void WriteAltProjTraceCsv(std::ostream& out,
                          const std::vector<AltProjTraceEntry>& trace);

}  // namespace csdesign

#endif  // CSDESIGN_ALTPROJ_H_
