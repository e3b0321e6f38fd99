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

#ifndef CSDESIGN_HARNESS_H_
#define CSDESIGN_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "csdesign/coherence.h"
#include "csdesign/experiment_config.h"
#include "csdesign/matrix_core.h"
#include "csdesign/projection_design.h"

namespace csdesign {

struct SignalSample {
  Eigen::VectorXd theta;  // exactly S nonzeros, N(0, 1) values
  Eigen::VectorXd x;      // D theta
};

// One planted signal: S distinct uniformly random atoms with i.i.d. N(0, 1)
// coefficients.
SignalSample SynthesizeSignal(const Dictionary& dictionary, int sparsity,
                              uint64_t seed);

// Seed of trial `trial_index` at sparsity S under `master_seed`.
uint64_t TrialSeed(uint64_t master_seed, int sparsity, int trial_index);

// N planted signals, trial i seeded by TrialSeed(master_seed, S, i).
std::vector<SignalSample> SynthesizeSignals(const Dictionary& dictionary,
                                            int sparsity, int count,
                                            uint64_t master_seed);

struct TrialRecord {
  int sparsity = 0;
  int trial_index = 0;
  std::string optimizer;
  std::string solver;
  double relative_error = 0.0;  // ||theta_hat - theta|| / ||theta||
  bool success = false;         // relative_error <= failure threshold
  std::string status;
  uint64_t seed = 0;

  bool operator==(const TrialRecord&) const = default;
};

struct SummaryCell {
  std::string optimizer;
  std::string solver;
  int sparsity = 0;
  double mean_relative_error = 0.0;
  double failure_rate = 0.0;
  int trials = 0;

  bool operator==(const SummaryCell&) const = default;
};

struct ArmReport {
  std::string name;
  ProjectionMatrix projection;
  CoherencePair coherence;
  std::vector<HistogramBin> histogram;
};

struct SweepResult {
  std::vector<TrialRecord> records;
  std::vector<SummaryCell> summary;
  std::vector<ArmReport> arms;
};

// Builds the projection design for arm `name` from a resolved config.
ProjectionDesign ArmDesign(const ExperimentConfig& cfg,
                           const std::string& name);

// Loads or draws the dictionary named by the config; a file source
// overrides n and k.
Dictionary ResolveDictionary(ExperimentConfig& cfg);

// Recovers theta from y = P x for one planted signal against the
// column-normalized effective dictionary and scores it.
TrialRecord RunTrial(const Eigen::MatrixXd& normalized_effective,
                     const Eigen::VectorXd& column_norms,
                     const ProjectionMatrix& projection,
                     const SignalSample& sample, const std::string& solver,
                     double failure_threshold);

// Runs every arm over every (S, trial). Signals are shared across arms, so
// arms are paired. Records are ordered by (arm, S, trial, solver) whatever
// the thread count. Seeds must be resolved (see ResolveSeeds).
SweepResult RunSweep(ExperimentConfig& cfg, int threads = 1);

// Aggregates records per (optimizer, solver, S) in first-seen order.
std::vector<SummaryCell> Summarize(const std::vector<TrialRecord>& records);

void WriteTrialsCsv(std::ostream& out, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> ReadTrialsCsv(std::istream& in);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryCell>& cells);
std::vector<SummaryCell> ReadSummaryCsv(std::istream& in);

// Writes trials.csv, summary.csv, gram_hist_<arm>.csv and config.echo into
// out_dir. Throws IoError with the offending path.
void EmitReports(const SweepResult& result, const ExperimentConfig& cfg,
                 const std::filesystem::path& out_dir);

}  // namespace csdesign

#endif  // CSDESIGN_HARNESS_H_
