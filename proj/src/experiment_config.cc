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

#include "csdesign/experiment_config.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/random.h"

namespace csdesign {
namespace {

const std::vector<std::string> kOptimizerNames = {"none", "elad", "sapiro",
                                                  "altproj"};

std::string Trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const size_t end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

uint64_t ParseSeed(const std::string& value) {
  return static_cast<uint64_t>(ParseUnsigned(value));
}

int ParseCount(const std::string& value) {
  const long long parsed = ParseInteger(value);
  if (parsed < 0 || parsed > 1'000'000'000) {
    throw InvalidArgumentError("count out of range: " + value);
  }
  return static_cast<int>(parsed);
}

std::vector<int> ParseSparsityRange(const std::string& value) {
  std::vector<int> levels;
  const size_t dots = value.find("..");
  if (dots != std::string::npos) {
    const int lo = ParseCount(Trim(value.substr(0, dots)));
    const int hi = ParseCount(Trim(value.substr(dots + 2)));
    if (hi < lo) throw InvalidArgumentError("empty S_range " + value);
    for (int s = lo; s <= hi; ++s) levels.push_back(s);
    return levels;
  }
  for (const std::string& field : SplitCsvLine(value)) {
    levels.push_back(ParseCount(field));
  }
  return levels;
}

ThresholdMode ParseThresholdMode(const std::string& value) {
  const size_t colon = value.find(':');
  if (colon == std::string::npos) {
    throw InvalidArgumentError("threshold must be fixed:<t> or relative:<%>");
  }
  const std::string kind = Trim(value.substr(0, colon));
  const double number = ParseDouble(value.substr(colon + 1));
  if (kind == "fixed") return FixedThreshold{number};
  if (kind == "relative") return RelativeThresholdPercent{number};
  throw InvalidArgumentError("unknown threshold mode '" + kind + "'");
}

std::string FormatThresholdMode(const ThresholdMode& mode) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&mode)) {
    return "fixed:" + FormatDouble(fixed->t);
  }
  return "relative:" +
         FormatDouble(std::get<RelativeThresholdPercent>(mode).percent);
}

std::optional<uint64_t>* SeedSlot(ExperimentConfig& cfg,
                                  const std::string& name) {
  if (name == "none") return &cfg.none_seed;
  if (name == "elad") return &cfg.elad_seed;
  if (name == "sapiro") return &cfg.sapiro_seed;
  if (name == "altproj") return &cfg.altproj_seed;
  return nullptr;
}

void ApplyKey(ExperimentConfig& cfg, const std::string& key,
              const std::string& value) {
  if (key == "n") {
    cfg.n = ParseCount(value);
  } else if (key == "k") {
    cfg.k = ParseCount(value);
  } else if (key == "m") {
    cfg.m = ParseCount(value);
  } else if (key == "S_range") {
    cfg.sparsity_levels = ParseSparsityRange(value);
  } else if (key == "N") {
    cfg.trials = ParseCount(value);
  } else if (key == "dictionary_source") {
    if (value == "gaussian") {
      cfg.dictionary_file.clear();
      cfg.dictionary_seed.reset();
    } else if (value.rfind("gaussian:", 0) == 0) {
      cfg.dictionary_file.clear();
      cfg.dictionary_seed = ParseSeed(value.substr(9));
    } else if (value.rfind("file:", 0) == 0 && value.size() > 5) {
      cfg.dictionary_file = value.substr(5);
      cfg.dictionary_seed.reset();
    } else {
      throw InvalidArgumentError("dictionary_source must be gaussian, "
                                 "gaussian:<seed> or file:<path>");
    }
  } else if (key == "optimizers") {
    cfg.optimizers.clear();
    for (const std::string& name : SplitCsvLine(value)) {
      if (std::find(kOptimizerNames.begin(), kOptimizerNames.end(), name) ==
          kOptimizerNames.end()) {
        throw InvalidArgumentError("unknown optimizer '" + name + "'");
      }
      cfg.optimizers.push_back(name);
    }
  } else if (key == "solver") {
    if (value == "omp") {
      cfg.solver = SolverChoice::kOmp;
    } else if (value == "bp") {
      cfg.solver = SolverChoice::kBp;
    } else if (value == "both") {
      cfg.solver = SolverChoice::kBoth;
    } else {
      throw InvalidArgumentError("solver must be omp, bp or both");
    }
  } else if (key == "failure_threshold") {
    cfg.failure_threshold = ParseDouble(value);
  } else if (key == "master_seed") {
    cfg.master_seed = ParseSeed(value);
  } else if (key == "hist_bins") {
    cfg.hist_bins = ParseCount(value);
  } else if (key == "elad.threshold") {
    cfg.elad_threshold = ParseThresholdMode(value);
  } else if (key == "elad.gamma") {
    cfg.elad_gamma = ParseDouble(value);
  } else if (key == "elad.iterations") {
    cfg.elad_iterations = ParseCount(value);
  } else if (key == "altproj.t") {
    cfg.altproj_t = ParseDouble(value);
  } else if (key == "altproj.iterations") {
    cfg.altproj_iterations = ParseCount(value);
  } else if (key.size() > 5 && key.compare(key.size() - 5, 5, ".seed") == 0 &&
             SeedSlot(cfg, key.substr(0, key.size() - 5)) != nullptr) {
    *SeedSlot(cfg, key.substr(0, key.size() - 5)) = ParseSeed(value);
  } else {
    throw InvalidArgumentError("unknown key '" + key + "'");
  }
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (n < 1 || k < 1 || m < 1) {
    throw InvalidArgumentError("n, k and m must be >= 1");
  }
  if (m > n) throw InvalidArgumentError("m must not exceed n");
  if (sparsity_levels.empty()) {
    throw InvalidArgumentError("S_range must be nonempty");
  }
  for (int s : sparsity_levels) {
    if (s < 1 || s >= m || s > k) {
      throw InvalidArgumentError("every S must satisfy 1 <= S < m and S <= k");
    }
  }
  if (trials < 1) throw InvalidArgumentError("N must be >= 1");
  if (optimizers.empty()) {
    throw InvalidArgumentError("optimizers must be nonempty");
  }
  for (size_t i = 0; i < optimizers.size(); ++i) {
    if (std::find(optimizers.begin(), optimizers.begin() + i, optimizers[i]) !=
        optimizers.begin() + i) {
      throw InvalidArgumentError("optimizer listed twice: " + optimizers[i]);
    }
  }
  if (!(failure_threshold >= 0.0)) {
    throw InvalidArgumentError("failure_threshold must be >= 0");
  }
  if (hist_bins < 1) throw InvalidArgumentError("hist_bins must be >= 1");
  EladConfig elad{elad_threshold, elad_gamma, elad_iterations, m, 0};
  elad.Validate();
  AltProjConfig altproj{altproj_t, m, altproj_iterations, 0};
  altproj.Validate();
}

void ExperimentConfig::ResolveSeeds() {
  if (dictionary_file.empty() && !dictionary_seed) {
    dictionary_seed = DeriveSeed(master_seed, "dictionary");
  }
  for (const std::string& name : kOptimizerNames) {
    std::optional<uint64_t>* slot = SeedSlot(*this, name);
    if (!*slot) *slot = DeriveSeed(master_seed, "design-" + name);
  }
}

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  ExperimentConfig cfg;
  std::vector<std::string> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t hash = line.find('#');
    const std::string content = Trim(line.substr(0, hash));
    if (content.empty()) continue;
    const size_t eq = content.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("line " + std::to_string(line_number) +
                                 ": expected key = value");
    }
    const std::string key = Trim(content.substr(0, eq));
    const std::string value = Trim(content.substr(eq + 1));
    try {
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        throw InvalidArgumentError("duplicate key '" + key + "'");
      }
      seen.push_back(key);
      ApplyKey(cfg, key, value);
    } catch (const Error& e) {
      throw InvalidArgumentError("line " + std::to_string(line_number) +
                                 ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path);
  try {
    return ParseExperimentConfig(in);
  } catch (const Error& e) {
    throw InvalidArgumentError(path + ": " + e.what());
  }
}

std::string FormatExperimentConfig(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "n = " << cfg.n << '\n';
  out << "k = " << cfg.k << '\n';
  out << "m = " << cfg.m << '\n';
  out << "S_range = ";
  for (size_t i = 0; i < cfg.sparsity_levels.size(); ++i) {
    out << (i ? "," : "") << cfg.sparsity_levels[i];
  }
  out << '\n';
  out << "N = " << cfg.trials << '\n';
  if (!cfg.dictionary_file.empty()) {
    out << "dictionary_source = file:" << cfg.dictionary_file << '\n';
  } else if (cfg.dictionary_seed) {
    out << "dictionary_source = gaussian:" << *cfg.dictionary_seed << '\n';
  } else {
    out << "dictionary_source = gaussian\n";
  }
  out << "optimizers = ";
  for (size_t i = 0; i < cfg.optimizers.size(); ++i) {
    out << (i ? "," : "") << cfg.optimizers[i];
  }
  out << '\n';
  out << "solver = " << SolverChoiceName(cfg.solver) << '\n';
  out << "failure_threshold = " << FormatDouble(cfg.failure_threshold) << '\n';
  out << "master_seed = " << cfg.master_seed << '\n';
  out << "hist_bins = " << cfg.hist_bins << '\n';
  out << "elad.threshold = " << FormatThresholdMode(cfg.elad_threshold)
      << '\n';
  out << "elad.gamma = " << FormatDouble(cfg.elad_gamma) << '\n';
  out << "elad.iterations = " << cfg.elad_iterations << '\n';
  out << "altproj.t = " << FormatDouble(cfg.altproj_t) << '\n';
  out << "altproj.iterations = " << cfg.altproj_iterations << '\n';
  ExperimentConfig copy = cfg;
  for (const std::string& name : kOptimizerNames) {
    if (const auto& seed = *SeedSlot(copy, name)) {
      out << name << ".seed = " << *seed << '\n';
    }
  }
  return out.str();
}

void ApplyPaperScale(ExperimentConfig& cfg) {
  cfg.n = 200;
  cfg.k = 400;
  cfg.m = 30;
  cfg.trials = 10000;
  cfg.sparsity_levels.clear();
  for (int s = 1; s <= 10; ++s) cfg.sparsity_levels.push_back(s);
  cfg.altproj_t = 0.26;
  cfg.altproj_iterations = 1000;
  cfg.elad_threshold = RelativeThresholdPercent{26.0};
  cfg.elad_gamma = 0.6;
}

const char* SolverChoiceName(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::kOmp:
      return "omp";
    case SolverChoice::kBp:
      return "bp";
    case SolverChoice::kBoth:
      return "both";
  }
  return "unknown";
}

}  // namespace csdesign
