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

#ifndef CSDESIGN_ELAD_H_
#define CSDESIGN_ELAD_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "csdesign/matrix_core.h"

namespace csdesign {

// Shrinkage of a single Gram entry:
//   |g| >= t        -> gamma * g
//   t > |g| >= g*t  -> gamma * t * sign(g)
//   otherwise       -> g
double ShrinkElad(double g, double t, double gamma);

struct FixedThreshold {
  double t = 0.5;
};
// Threshold chosen so that `percent` % of the off-diagonal entries lie above
// it; recomputed from the current Gram matrix on every iteration.
struct RelativeThresholdPercent {
  double percent = 26.0;
};
using ThresholdMode = std::variant<FixedThreshold, RelativeThresholdPercent>;

struct EladConfig {
  ThresholdMode threshold = RelativeThresholdPercent{};
  double gamma = 0.6;
  int iterations = 100;
  int m = 1;
  uint64_t seed = 0;

  // Throws InvalidArgumentError when a field is out of range.
  void Validate() const;
};

struct EladTraceEntry {
  // Average coherence of the new effective dictionary at `threshold`;
  // nullopt when no off-diagonal entry exceeds it.
  std::optional<double> mu_t;
  double mu = 0.0;
  double threshold = 0.0;
};

struct EladResult {
  ProjectionMatrix projection;
  std::vector<EladTraceEntry> trace;
};

// Shrinks the off-diagonal entries of a Gram matrix; the diagonal is copied.
Eigen::MatrixXd ShrinkGramElad(const Eigen::MatrixXd& g, double t,
                               double gamma);

// Iterative minimization of mu_t(P D): normalize, shrink the Gram matrix,
// reduce it to rank m, factor it and project back onto P by least squares.
// P_0 is i.i.d. N(0, 1) from cfg.seed. Requires 1 <= cfg.m <= n. Throws
// ZeroColumnError naming the iteration if P D loses a column.
EladResult EladOptimize(const Dictionary& dictionary, const EladConfig& cfg);

// CSV with header `iter,mu_t,mu,threshold`; iterations count from 1 and an
// empty average is written as an empty field.
void WriteEladTraceCsv(std::ostream& out,
                       const std::vector<EladTraceEntry>& trace);

}  // namespace csdesign

#endif  // CSDESIGN_ELAD_H_
