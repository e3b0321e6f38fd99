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

#include "csdesign/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>

#include "csdesign/csv_io.h"
#include "csdesign/errors.h"
#include "csdesign/pursuit.h"
#include "csdesign/random.h"

namespace csdesign {
namespace {

std::vector<std::string> SolverNames(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::kOmp:
      return {"omp"};
    case SolverChoice::kBp:
      return {"bp"};
    case SolverChoice::kBoth:
      return {"omp", "bp"};
  }
  return {};
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void ParallelFor(int count, int threads, const Body& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      try {
        for (int i = next++; i < count && !failed; i = next++) body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

void RequireHeader(std::istream& in, std::string_view expected) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected) {
    throw IoError("unexpected CSV header '" + line + "'");
  }
}

constexpr std::string_view kTrialsHeader =
    "optimizer,solver,S,trial_index,relative_error,success,status,seed";
constexpr std::string_view kSummaryHeader =
    "optimizer,solver,S,mean_relative_error,failure_rate,trials";

}  // namespace

SignalSample SynthesizeSignal(const Dictionary& dictionary, int sparsity,
                              uint64_t seed) {
  const int k = dictionary.num_atoms();
  if (sparsity < 0 || sparsity > k) {
    throw InvalidArgumentError("sparsity must lie in [0, k]");
  }
  Rng rng(seed);
  std::vector<int> indices(k);
  std::iota(indices.begin(), indices.end(), 0);
  for (int s = 0; s < sparsity; ++s) {
    std::uniform_int_distribution<int> pick(s, k - 1);
    std::swap(indices[s], indices[pick(rng)]);
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  SignalSample sample;
  sample.theta = Eigen::VectorXd::Zero(k);
  for (int s = 0; s < sparsity; ++s) sample.theta(indices[s]) = normal(rng);
  sample.x = dictionary.matrix() * sample.theta;
  return sample;
}

uint64_t TrialSeed(uint64_t master_seed, int sparsity, int trial_index) {
  return DeriveSeed(master_seed, "signal", static_cast<uint64_t>(sparsity),
                    static_cast<uint64_t>(trial_index));
}

std::vector<SignalSample> SynthesizeSignals(const Dictionary& dictionary,
                                            int sparsity, int count,
                                            uint64_t master_seed) {
  std::vector<SignalSample> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    samples.push_back(SynthesizeSignal(dictionary, sparsity,
                                       TrialSeed(master_seed, sparsity, i)));
  }
  return samples;
}

ProjectionDesign ArmDesign(const ExperimentConfig& cfg,
                           const std::string& name) {
  auto seed = [&](const std::optional<uint64_t>& slot) {
    if (!slot) throw InvalidArgumentError("unresolved seed for " + name);
    return *slot;
  };
  if (name == "none") return RandomProjectionConfig{cfg.m, seed(cfg.none_seed)};
  if (name == "elad") {
    return EladConfig{cfg.elad_threshold, cfg.elad_gamma, cfg.elad_iterations,
                      cfg.m, seed(cfg.elad_seed)};
  }
  if (name == "sapiro") return SapiroConfig{cfg.m, seed(cfg.sapiro_seed)};
  if (name == "altproj") {
    return AltProjConfig{cfg.altproj_t, cfg.m, cfg.altproj_iterations,
                         seed(cfg.altproj_seed)};
  }
  throw InvalidArgumentError("unknown optimizer '" + name + "'");
}

Dictionary ResolveDictionary(ExperimentConfig& cfg) {
  if (!cfg.dictionary_file.empty()) {
    Dictionary d(ReadMatrixCsv(cfg.dictionary_file));
    cfg.n = d.signal_dim();
    cfg.k = d.num_atoms();
    return d;
  }
  if (!cfg.dictionary_seed) {
    throw InvalidArgumentError("dictionary seed is unresolved");
  }
  return Dictionary(GaussianMatrix(cfg.n, cfg.k, *cfg.dictionary_seed));
}

TrialRecord RunTrial(const Eigen::MatrixXd& normalized_effective,
                     const Eigen::VectorXd& column_norms,
                     const ProjectionMatrix& projection,
                     const SignalSample& sample, const std::string& solver,
                     double failure_threshold) {
  const int sparsity = static_cast<int>((sample.theta.array() != 0.0).count());
  TrialRecord record;
  record.sparsity = sparsity;
  record.solver = solver;
  Eigen::VectorXd estimate = Eigen::VectorXd::Zero(sample.theta.size());
  try {
    const Eigen::VectorXd y = projection.matrix() * sample.x;
    const RecoveryResult recovery =
        solver == "omp"
            ? Omp(normalized_effective, y, sparsity,
                  DefaultResidualTolerance(y))
            : BasisPursuit(normalized_effective, y);
    // Undo the column normalization of the effective dictionary.
    estimate = recovery.theta.values.cwiseQuotient(column_norms);
    record.status = RecoveryStatusName(recovery.status);
  } catch (const Error& e) {
    record.status = "error";
  }
  const double truth = sample.theta.norm();
  const double diff = (estimate - sample.theta).norm();
  record.relative_error = truth > 0.0 ? diff / truth : diff;
  record.success = record.relative_error <= failure_threshold;
  return record;
}

SweepResult RunSweep(ExperimentConfig& cfg, int threads) {
  cfg.ResolveSeeds();
  const Dictionary dictionary = ResolveDictionary(cfg);
  cfg.Validate();

  const std::vector<std::string> solvers = SolverNames(cfg.solver);
  const int levels = static_cast<int>(cfg.sparsity_levels.size());
  std::vector<std::vector<SignalSample>> signals(levels);
  ParallelFor(levels, threads, [&](int l) {
    signals[l] = SynthesizeSignals(dictionary, cfg.sparsity_levels[l],
                                   cfg.trials, cfg.master_seed);
  });

  SweepResult result;
  for (const std::string& name : cfg.optimizers) {
    ProjectionMatrix projection =
        DesignProjection(dictionary, ArmDesign(cfg, name));
    const Eigen::MatrixXd effective = projection.matrix() * dictionary.matrix();
    const Eigen::VectorXd norms = effective.colwise().norm().transpose();
    const Eigen::MatrixXd normalized = NormalizeColumns(effective);
    const GramMatrix gram = Gram(effective);

    const int tasks = levels * cfg.trials;
    std::vector<TrialRecord> records(static_cast<size_t>(tasks) *
                                     solvers.size());
    ParallelFor(tasks, threads, [&](int task) {
      const int level = task / cfg.trials;
      const int trial = task % cfg.trials;
      const SignalSample& sample = signals[level][trial];
      for (size_t s = 0; s < solvers.size(); ++s) {
        TrialRecord record = RunTrial(normalized, norms, projection, sample,
                                      solvers[s], cfg.failure_threshold);
        record.sparsity = cfg.sparsity_levels[level];
        record.trial_index = trial;
        record.optimizer = name;
        record.seed = TrialSeed(cfg.master_seed, record.sparsity, trial);
        records[static_cast<size_t>(task) * solvers.size() + s] =
            std::move(record);
      }
    });
    result.records.insert(result.records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
    result.arms.push_back({name, std::move(projection), MutualCoherence(gram),
                           OffDiagonalHistogram(gram, cfg.hist_bins)});
  }
  result.summary = Summarize(result.records);
  return result;
}

std::vector<SummaryCell> Summarize(const std::vector<TrialRecord>& records) {
  std::vector<SummaryCell> cells;
  std::vector<double> error_sums;
  std::vector<int> failures;
  for (const TrialRecord& r : records) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& c) {
      return c.optimizer == r.optimizer && c.solver == r.solver &&
             c.sparsity == r.sparsity;
    });
    if (it == cells.end()) {
      cells.push_back({r.optimizer, r.solver, r.sparsity, 0.0, 0.0, 0});
      error_sums.push_back(0.0);
      failures.push_back(0);
      it = cells.end() - 1;
    }
    const size_t index = static_cast<size_t>(it - cells.begin());
    ++it->trials;
    error_sums[index] += r.relative_error;
    if (!r.success) ++failures[index];
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    cells[i].mean_relative_error = error_sums[i] / cells[i].trials;
    cells[i].failure_rate =
        static_cast<double>(failures[i]) / cells[i].trials;
  }
  return cells;
}

void WriteTrialsCsv(std::ostream& out,
                    const std::vector<TrialRecord>& records) {
  out << kTrialsHeader << '\n';
  for (const TrialRecord& r : records) {
    out << r.optimizer << ',' << r.solver << ',' << r.sparsity << ','
        << r.trial_index << ',' << FormatDouble(r.relative_error) << ','
        << (r.success ? 1 : 0) << ',' << r.status << ',' << r.seed << '\n';
  }
}

std::vector<TrialRecord> ReadTrialsCsv(std::istream& in) {
  RequireHeader(in, kTrialsHeader);
  std::vector<TrialRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 8) throw IoError("malformed trials row: " + line);
    TrialRecord r;
    r.optimizer = f[0];
    r.solver = f[1];
    r.sparsity = static_cast<int>(ParseInteger(f[2]));
    r.trial_index = static_cast<int>(ParseInteger(f[3]));
    r.relative_error = ParseDouble(f[4]);
    r.success = ParseInteger(f[5]) != 0;
    r.status = f[6];
    r.seed = ParseUnsigned(f[7]);
    records.push_back(std::move(r));
  }
  return records;
}

void WriteSummaryCsv(std::ostream& out,
                     const std::vector<SummaryCell>& cells) {
  out << kSummaryHeader << '\n';
  for (const SummaryCell& c : cells) {
    out << c.optimizer << ',' << c.solver << ',' << c.sparsity << ','
        << FormatDouble(c.mean_relative_error) << ','
        << FormatDouble(c.failure_rate) << ',' << c.trials << '\n';
  }
}

std::vector<SummaryCell> ReadSummaryCsv(std::istream& in) {
  RequireHeader(in, kSummaryHeader);
  std::vector<SummaryCell> cells;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 6) throw IoError("malformed summary row: " + line);
    cells.push_back({f[0], f[1], static_cast<int>(ParseInteger(f[2])),
                     ParseDouble(f[3]), ParseDouble(f[4]),
                     static_cast<int>(ParseInteger(f[5]))});
  }
  return cells;
}

void EmitReports(const SweepResult& result, const ExperimentConfig& cfg,
                 const std::filesystem::path& out_dir) {
  auto write = [&](const std::filesystem::path& name, const auto& body) {
    const std::filesystem::path path = out_dir / name;
    std::ofstream out = OpenForWrite(path);
    body(out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
  };
  write("trials.csv",
        [&](std::ostream& out) { WriteTrialsCsv(out, result.records); });
  write("summary.csv",
        [&](std::ostream& out) { WriteSummaryCsv(out, result.summary); });
  for (const ArmReport& arm : result.arms) {
    write("gram_hist_" + arm.name + ".csv", [&](std::ostream& out) {
      WriteHistogramCsv(out, arm.histogram);
    });
  }
  write("config.echo",
        [&](std::ostream& out) { out << FormatExperimentConfig(cfg); });
}

}  // namespace csdesign
