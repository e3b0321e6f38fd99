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

#include "csdesign/elad.h"

#include <cmath>
#include <ostream>
#include <string>

#include "csdesign/coherence.h"
#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/random.h"

namespace csdesign {
namespace {

GramMatrix GramAtIteration(const Eigen::MatrixXd& effective, int iteration) {
  try {
    return Gram(effective);
  } catch (const ZeroColumnError& e) {
    throw ZeroColumnError(e.index(),
                          "effective dictionary at iteration " +
                              std::to_string(iteration));
  }
}

}  // namespace

double ShrinkElad(double g, double t, double gamma) {
  const double magnitude = std::abs(g);
  if (magnitude >= t) return gamma * g;
  if (magnitude >= gamma * t) return std::copysign(gamma * t, g);
  return g;
}

Eigen::MatrixXd ShrinkGramElad(const Eigen::MatrixXd& g, double t,
                               double gamma) {
  Eigen::MatrixXd out = g;
  for (int j = 0; j < g.cols(); ++j) {
    for (int i = 0; i < g.rows(); ++i) {
      if (i != j) out(i, j) = ShrinkElad(g(i, j), t, gamma);
    }
  }
  return out;
}

void EladConfig::Validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgumentError("elad: gamma must lie in (0, 1)");
  }
  if (iterations < 1) {
    throw InvalidArgumentError("elad: iterations must be >= 1");
  }
  if (m < 1) throw InvalidArgumentError("elad: m must be >= 1");
  if (const auto* fixed = std::get_if<FixedThreshold>(&threshold)) {
    if (!(fixed->t > 0.0 && fixed->t < 1.0)) {
      throw InvalidArgumentError("elad: fixed threshold must lie in (0, 1)");
    }
  } else {
    const double percent = std::get<RelativeThresholdPercent>(threshold).percent;
    if (!(percent > 0.0 && percent < 100.0)) {
      throw InvalidArgumentError("elad: percent must lie in (0, 100)");
    }
  }
}

EladResult EladOptimize(const Dictionary& dictionary, const EladConfig& cfg) {
  cfg.Validate();
  const int n = dictionary.signal_dim();
  if (cfg.m > n) {
    throw InvalidArgumentError("elad: m = " + std::to_string(cfg.m) +
                               " exceeds signal dimension " +
                               std::to_string(n));
  }
  const Eigen::MatrixXd& d = dictionary.matrix();
  const LeastSquaresProjector projector(dictionary);

  Eigen::MatrixXd p = GaussianMatrix(cfg.m, n, cfg.seed);
  GramMatrix gram = GramAtIteration(p * d, 0);

  EladResult result{ProjectionMatrix(p), {}};
  result.trace.reserve(cfg.iterations);
  for (int iter = 1; iter <= cfg.iterations; ++iter) {
    double t = 0.0;
    if (const auto* fixed = std::get_if<FixedThreshold>(&cfg.threshold)) {
      t = fixed->t;
    } else {
      t = ComputeRelativeThreshold(
              gram, std::get<RelativeThresholdPercent>(cfg.threshold).percent)
              .t;
    }
    const Eigen::MatrixXd shrunk = ShrinkGramElad(gram.matrix(), t, cfg.gamma);
    const Eigen::MatrixXd reduced = SymmetricRankTruncate(shrunk, cfg.m);
    const Eigen::MatrixXd root = SqrtFactor(reduced, cfg.m);
    result.projection = projector.Solve(root);

    gram = GramAtIteration(result.projection.matrix() * d, iter);
    EladTraceEntry entry;
    entry.threshold = t;
    entry.mu = MutualCoherence(gram).mu;
    entry.mu_t = TryTAverageCoherence(gram, t);
    result.trace.push_back(entry);
  }
  return result;
}

void WriteEladTraceCsv(std::ostream& out,
                       const std::vector<EladTraceEntry>& trace) {
  out << "iter,mu_t,mu,threshold\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    const EladTraceEntry& e = trace[i];
    out << (i + 1) << ',' << (e.mu_t ? FormatDouble(*e.mu_t) : "") << ','
        << FormatDouble(e.mu) << ',' << FormatDouble(e.threshold) << '\n';
  }
}

}  // namespace csdesign
