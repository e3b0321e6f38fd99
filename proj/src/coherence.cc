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

#include "csdesign/coherence.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "csdesign/csv_io.h"
#include "csdesign/errors.h"

namespace csdesign {

CoherencePair MutualCoherence(const GramMatrix& g) {
  const Eigen::MatrixXd& m = g.matrix();
  if (m.rows() < 2) throw TooFewColumnsError("coherence needs >= 2 columns");
  CoherencePair best{-1.0, 0, 1};
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      const double v = std::abs(m(i, j));
      if (v > best.mu) best = {v, i, j};
    }
  }
  return best;
}

CoherencePair MutualCoherence(const Eigen::MatrixXd& d) {
  if (d.cols() < 2) throw TooFewColumnsError("coherence needs >= 2 columns");
  return MutualCoherence(Gram(d));
}

std::optional<double> TryTAverageCoherence(const GramMatrix& g, double t) {
  if (!(t >= 0.0)) throw InvalidArgumentError("threshold must be >= 0");
  const Eigen::MatrixXd& m = g.matrix();
  double sum = 0.0;
  long long count = 0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      const double v = std::abs(m(i, j));
      if (v > t) {
        sum += v;
        ++count;
      }
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

double TAverageCoherence(const GramMatrix& g, double t) {
  const std::optional<double> value = TryTAverageCoherence(g, t);
  if (!value) {
    throw EmptyAverageError("no off-diagonal magnitude exceeds t = " +
                            FormatDouble(t));
  }
  return *value;
}

double TAverageCoherence(const Eigen::MatrixXd& d, double t) {
  if (d.cols() < 2) throw TooFewColumnsError("coherence needs >= 2 columns");
  return TAverageCoherence(Gram(d), t);
}

std::vector<double> OffDiagonalMagnitudes(const Eigen::MatrixXd& g) {
  std::vector<double> out;
  const long long k = g.rows();
  out.reserve(static_cast<size_t>(k * (k - 1) / 2));
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = i + 1; j < g.cols(); ++j) out.push_back(std::abs(g(i, j)));
  }
  return out;
}

RelativeThreshold ComputeRelativeThreshold(const GramMatrix& g,
                                           double percent) {
  if (!(percent > 0.0 && percent < 100.0)) {
    throw InvalidArgumentError("percent must lie in (0, 100)");
  }
  if (g.size() < 2) throw TooFewColumnsError("threshold needs >= 2 columns");
  std::vector<double> mags = OffDiagonalMagnitudes(g.matrix());
  const size_t population = mags.size();
  // The relative epsilon keeps e.g. 26% of 79800 from rounding up past the
  // exact product through representation error.
  const double exact = percent / 100.0 * static_cast<double>(population);
  const size_t target = static_cast<size_t>(
      std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  RelativeThreshold out;
  if (target >= population) {
    out.t = 0.0;
  } else {
    std::nth_element(mags.begin(), mags.begin() + target, mags.end(),
                     std::greater<double>());
    out.t = mags[target];
  }
  const auto above = static_cast<size_t>(std::count_if(
      mags.begin(), mags.end(), [&](double v) { return v > out.t; }));
  out.degenerate = above != std::min(target, population);
  return out;
}

std::vector<HistogramBin> OffDiagonalHistogram(const GramMatrix& g, int bins) {
  if (bins < 1) throw InvalidArgumentError("histogram needs >= 1 bin");
  std::vector<HistogramBin> hist(bins);
  for (int b = 0; b < bins; ++b) {
    hist[b].lower = static_cast<double>(b) / bins;
  }
  const Eigen::MatrixXd& m = g.matrix();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      const double v = std::abs(m(i, j));
      const int b = std::clamp(static_cast<int>(std::floor(v * bins)), 0,
                               bins - 1);
      ++hist[b].count;
    }
  }
  return hist;
}

void WriteHistogramCsv(std::ostream& out,
                       const std::vector<HistogramBin>& histogram) {
  out << "bin_lower,count\n";
  for (const HistogramBin& bin : histogram) {
    out << FormatDouble(bin.lower) << ',' << bin.count << '\n';
  }
}

CoherenceReport AnalyzeCoherence(const GramMatrix& g, double t, int bins) {
  const CoherencePair pair = MutualCoherence(g);
  CoherenceReport report;
  report.mu = pair.mu;
  report.argmax_i = pair.i;
  report.argmax_j = pair.j;
  report.t = t;
  report.mu_t = TryTAverageCoherence(g, t);
  report.histogram = OffDiagonalHistogram(g, bins);
  return report;
}

}  // namespace csdesign
