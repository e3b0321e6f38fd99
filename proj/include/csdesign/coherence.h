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

#ifndef CSDESIGN_COHERENCE_H_
#define CSDESIGN_COHERENCE_H_

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "csdesign/matrix_core.h"

namespace csdesign {

struct CoherencePair {
  double mu = 0.0;
  // Column indices attaining mu, i < j.
  int i = 0;
  int j = 1;
};

// Largest |g_ij|, i != j, of the Gram matrix. Ties go to the
// lexicographically smallest (i, j).
CoherencePair MutualCoherence(const GramMatrix& g);
// Throws ZeroColumnError, or TooFewColumnsError when d has < 2 columns.
CoherencePair MutualCoherence(const Eigen::MatrixXd& d);

// Mean of the off-diagonal magnitudes strictly above t. Throws
// EmptyAverageError when no magnitude exceeds t.
double TAverageCoherence(const GramMatrix& g, double t);
double TAverageCoherence(const Eigen::MatrixXd& d, double t);

// Same as TAverageCoherence, but an empty average is reported as nullopt.
std::optional<double> TryTAverageCoherence(const GramMatrix& g, double t);

struct RelativeThreshold {
  double t = 0.0;
  // Ties at the order statistic make the strict count differ from the target.
  bool degenerate = false;
};

// Threshold t such that ceil(percent / 100 * k(k-1)/2) upper-triangle
// magnitudes lie strictly above t: the order statistic one past that count,
// or 0 when the count covers the whole population.
RelativeThreshold ComputeRelativeThreshold(const GramMatrix& g,
                                           double percent);

// Upper-triangle magnitudes of a square matrix, row-major over i < j.
std::vector<double> OffDiagonalMagnitudes(const Eigen::MatrixXd& g);

struct HistogramBin {
  double lower = 0.0;
  long long count = 0;
};

// Uniform bins over [0, 1] of the upper-triangle magnitudes. The last bin is
// closed on the right; magnitudes above 1 are counted there.
std::vector<HistogramBin> OffDiagonalHistogram(const GramMatrix& g, int bins);

// CSV with header `bin_lower,count`.
void WriteHistogramCsv(std::ostream& out,
                       const std::vector<HistogramBin>& histogram);

struct CoherenceReport {
  double mu = 0.0;
  std::optional<double> mu_t;
  double t = 0.0;
  std::vector<HistogramBin> histogram;
  int argmax_i = 0;
  int argmax_j = 1;
};

CoherenceReport AnalyzeCoherence(const GramMatrix& g, double t, int bins);

}  // namespace csdesign

#endif  // CSDESIGN_COHERENCE_H_
