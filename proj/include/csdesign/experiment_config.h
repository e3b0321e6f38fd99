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

#ifndef CSDESIGN_EXPERIMENT_CONFIG_H_
#define CSDESIGN_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csdesign/altproj.h"
#include "csdesign/elad.h"

namespace csdesign {

enum class SolverChoice { kOmp, kBp, kBoth };

// Benchmark configuration. The text form is one `key = value` per line with
// `#` comments:
//
//   n = 50
//   k = 100
//   m = 12
//   S_range = 1..6               (or 1,2,3)
//   N = 300
//   dictionary_source = gaussian | gaussian:<seed> | file:<path>
//   optimizers = none, elad, sapiro, altproj
//   solver = omp | bp | both
//   failure_threshold = 1e-4
//   master_seed = 1
//   hist_bins = 50
//   elad.threshold = relative:26 | fixed:0.5
//   elad.gamma = 0.6
//   elad.iterations = 100
//   altproj.t = 0.3
//   altproj.iterations = 500
//   <optimizer>.seed = <seed>    (derived from master_seed when absent)
//
// Unknown keys are rejected.
struct ExperimentConfig {
  int n = 50;
  int k = 100;
  int m = 12;
  std::vector<int> sparsity_levels = {1, 2, 3, 4, 5, 6};
  int trials = 300;
  // Empty path means a Gaussian dictionary drawn from dictionary_seed.
  std::string dictionary_file;
  std::optional<uint64_t> dictionary_seed;
  std::vector<std::string> optimizers = {"none", "elad", "sapiro", "altproj"};
  SolverChoice solver = SolverChoice::kBoth;
  double failure_threshold = 1e-4;
  uint64_t master_seed = 1;
  int hist_bins = 50;

  ThresholdMode elad_threshold = RelativeThresholdPercent{26.0};
  double elad_gamma = 0.6;
  int elad_iterations = 100;
  double altproj_t = 0.3;
  int altproj_iterations = 500;
  // Per-optimizer seed overrides, keyed by optimizer name.
  std::optional<uint64_t> none_seed;
  std::optional<uint64_t> elad_seed;
  std::optional<uint64_t> sapiro_seed;
  std::optional<uint64_t> altproj_seed;

  // Throws InvalidArgumentError on inconsistent settings.
  void Validate() const;
  // Fills every derived seed so the echoed config reproduces the run.
  void ResolveSeeds();
};

// Throws InvalidArgumentError naming the offending line.
ExperimentConfig ParseExperimentConfig(std::istream& in);
ExperimentConfig ReadExperimentConfig(const std::string& path);

// Inverse of ParseExperimentConfig.
std::string FormatExperimentConfig(const ExperimentConfig& cfg);

// The full-size protocol: n = 200, k = 400, m = 30, N = 10000, S = 1..10,
// altproj t = 0.26, elad 26% with gamma 0.6.
void ApplyPaperScale(ExperimentConfig& cfg);

const char* SolverChoiceName(SolverChoice choice);

}  // namespace csdesign

#endif  // CSDESIGN_EXPERIMENT_CONFIG_H_
