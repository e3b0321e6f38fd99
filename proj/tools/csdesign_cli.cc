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

// csdesign command line: projection design, benchmarks, histograms and
// dictionary learning.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <Eigen/Dense>
#include "CLI11.hpp"

#include "csdesign/altproj.h"
#include "csdesign/coherence.h"
#include "csdesign/csv_io.h"
#include "csdesign/dictlearn.h"
#include "csdesign/elad.h"
#include "csdesign/errors.h"
#include "csdesign/experiment_config.h"
#include "csdesign/harness.h"
#include "csdesign/matrix_core.h"
#include "csdesign/projection_design.h"
#include "csdesign/random.h"
#include "csdesign/sapiro.h"

namespace fs = std::filesystem;
using namespace csdesign;

namespace {

struct DictionaryArgs {
  std::string file;
  int n = 50;
  int k = 100;
  uint64_t seed = 7;
};

void AddDictionaryOptions(CLI::App* cmd, DictionaryArgs& a) {
  cmd->add_option("--dict", a.file, "dictionary CSV (n x k)");
  cmd->add_option("--n", a.n, "signal dimension of a Gaussian dictionary");
  cmd->add_option("--k", a.k, "atoms of a Gaussian dictionary");
  cmd->add_option("--dict-seed", a.seed, "seed of the Gaussian dictionary");
}

Dictionary LoadDictionary(const DictionaryArgs& a) {
  if (!a.file.empty()) return Dictionary(ReadMatrixCsv(fs::path(a.file)));
  return Dictionary(GaussianMatrix(a.n, a.k, a.seed));
}

struct MethodArgs {
  std::string method = "altproj";
  int m = 12;
  uint64_t seed = 1;
  std::optional<int> iterations;
  std::optional<double> t;
  std::optional<double> percent;
  double gamma = 0.6;
};

void AddMethodOptions(CLI::App* cmd, MethodArgs& a) {
  cmd->add_option("--method", a.method, "random|elad|sapiro|altproj")
      ->check(CLI::IsMember({"random", "elad", "sapiro", "altproj"}));
  cmd->add_option("--m", a.m, "number of measurements");
  cmd->add_option("--seed", a.seed, "optimizer seed");
  cmd->add_option("--iterations", a.iterations, "optimizer iterations");
  cmd->add_option("--t", a.t, "fixed threshold (elad, altproj)");
  cmd->add_option("--relative", a.percent,
                  "elad relative threshold, percent of off-diagonals kept");
  cmd->add_option("--gamma", a.gamma, "elad shrink factor");
}

ProjectionDesign MakeDesign(const MethodArgs& a) {
  if (a.method == "random") return RandomProjectionConfig{a.m, a.seed};
  if (a.method == "sapiro") return SapiroConfig{a.m, a.seed};
  if (a.method == "elad") {
    EladConfig cfg;
    cfg.m = a.m;
    cfg.seed = a.seed;
    cfg.gamma = a.gamma;
    if (a.iterations) cfg.iterations = *a.iterations;
    if (a.t && a.percent) {
      throw InvalidArgumentError("--t and --relative are exclusive");
    }
    if (a.t) cfg.threshold = FixedThreshold{*a.t};
    if (a.percent) cfg.threshold = RelativeThresholdPercent{*a.percent};
    cfg.Validate();
    return cfg;
  }
  AltProjConfig cfg;
  cfg.m = a.m;
  cfg.seed = a.seed;
  if (a.iterations) cfg.iterations = *a.iterations;
  if (a.t) cfg.t = *a.t;
  cfg.Validate();
  return cfg;
}

void WriteHistogram(const fs::path& path, const GramMatrix& g, int bins) {
  std::ofstream out = OpenForWrite(path);
  WriteHistogramCsv(out, OffDiagonalHistogram(g, bins));
}

void RunDesign(const DictionaryArgs& dict_args, const MethodArgs& args,
               int bins, const fs::path& out_dir) {
  const Dictionary d = LoadDictionary(dict_args);
  const ProjectionDesign design = MakeDesign(args);
  std::optional<ProjectionMatrix> p;
  std::ofstream trace = OpenForWrite(out_dir / "trace.csv");
  if (const auto* cfg = std::get_if<EladConfig>(&design)) {
    EladResult r = EladOptimize(d, *cfg);
    WriteEladTraceCsv(trace, r.trace);
    p = r.projection;
  } else if (const auto* cfg = std::get_if<SapiroConfig>(&design)) {
    SapiroResult r = SapiroOptimize(d, cfg->m, cfg->seed);
    WriteSapiroTraceCsv(trace, r.trace);
    p = r.projection;
  } else if (const auto* cfg = std::get_if<AltProjConfig>(&design)) {
    AltProjResult r = AltProjOptimize(d, *cfg);
    WriteAltProjTraceCsv(trace, r.trace);
    p = r.projection;
  } else {
    p = DesignProjection(d, design);
    trace << "iter\n";
  }
  WriteMatrixCsv(out_dir / "P.csv", p->matrix());
  const GramMatrix g = Gram(EffectiveDictionary(*p, d).matrix());
  WriteHistogram(out_dir / "hist.csv", g, bins);
  const CoherencePair mu = MutualCoherence(g);
  std::cout << "mu(PD) = " << FormatDouble(mu.mu) << " at (" << mu.i << ", "
            << mu.j << ")\n";
}

void RunBench(const std::string& config_path, bool paper_scale,
              const fs::path& out_dir, int threads) {
  ExperimentConfig cfg = ReadExperimentConfig(config_path);
  if (paper_scale) ApplyPaperScale(cfg);
  const SweepResult result = RunSweep(cfg, threads);
  EmitReports(result, cfg, out_dir);
  for (const SummaryCell& c : result.summary) {
    std::cout << c.optimizer << ' ' << c.solver << " S=" << c.sparsity
              << " failure_rate=" << FormatDouble(c.failure_rate) << '\n';
  }
}

void RunHist(const std::string& dict_path, const std::string& proj_path,
             int bins, const fs::path& out) {
  const Dictionary d(ReadMatrixCsv(fs::path(dict_path)));
  Eigen::MatrixXd m = d.matrix();
  if (!proj_path.empty()) {
    const ProjectionMatrix p(ReadMatrixCsv(fs::path(proj_path)));
    m = EffectiveDictionary(p, d).matrix();
  }
  WriteHistogram(out, Gram(m), bins);
}

struct PlantedArgs {
  std::string data;
  int n = 8;
  int k = 16;
  int signals = 400;
  int sparsity = 2;
  uint64_t seed = 11;
};

void AddPlantedOptions(CLI::App* cmd, PlantedArgs& a) {
  cmd->add_option("--data", a.data, "training signals CSV (n x p)");
  cmd->add_option("--planted-n", a.n, "synthetic data: signal dimension");
  cmd->add_option("--planted-k", a.k, "synthetic data: planted atoms");
  cmd->add_option("--signals", a.signals, "synthetic data: signal count");
  cmd->add_option("--planted-sparsity", a.sparsity,
                  "synthetic data: nonzeros per signal");
  cmd->add_option("--data-seed", a.seed, "synthetic data seed");
}

Eigen::MatrixXd LoadTraining(const PlantedArgs& a) {
  if (!a.data.empty()) return ReadMatrixCsv(fs::path(a.data));
  const Dictionary planted(RandomUnitDictionary(a.n, a.k, a.seed));
  Eigen::MatrixXd x(a.n, a.signals);
  for (int i = 0; i < a.signals; ++i) {
    x.col(i) = SynthesizeSignal(planted, a.sparsity,
                                DeriveSeed(a.seed, "training", i))
                   .x;
  }
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"csdesign: sensing matrix design and sparse recovery"};
  app.require_subcommand(1);

  DictionaryArgs design_dict;
  MethodArgs design_method;
  int design_bins = 50;
  std::string design_out = "design_out";
  CLI::App* design = app.add_subcommand("design", "optimize one projection");
  AddDictionaryOptions(design, design_dict);
  AddMethodOptions(design, design_method);
  design->add_option("--bins", design_bins, "histogram bins");
  design->add_option("--out", design_out, "output directory");

  std::string bench_config;
  bool bench_paper = false;
  std::string bench_out = "bench_out";
  int bench_threads = 1;
  CLI::App* bench = app.add_subcommand("bench", "run a recovery sweep");
  bench->add_option("--config", bench_config, "experiment config")
      ->required();
  bench->add_flag("--paper-scale", bench_paper,
                  "n=200, k=400, m=30, N=10000, S=1..10");
  bench->add_option("--out", bench_out, "output directory");
  bench->add_option("--threads", bench_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string hist_dict;
  std::string hist_proj;
  int hist_bins = 50;
  std::string hist_out = "hist.csv";
  CLI::App* hist = app.add_subcommand("hist", "Gram histogram of D or PD");
  hist->add_option("--dict", hist_dict, "dictionary CSV")->required();
  hist->add_option("--proj", hist_proj, "projection CSV");
  hist->add_option("--bins", hist_bins, "histogram bins");
  hist->add_option("--out", hist_out, "output CSV");

  PlantedArgs ksvd_data;
  KsvdOptions ksvd_opts;
  ksvd_opts.atoms = 16;
  ksvd_opts.sparsity = 2;
  ksvd_opts.seed = 1;
  std::string ksvd_out = "ksvd_out";
  CLI::App* ksvd = app.add_subcommand("ksvd", "learn a dictionary");
  AddPlantedOptions(ksvd, ksvd_data);
  ksvd->add_option("--atoms", ksvd_opts.atoms, "dictionary atoms");
  ksvd->add_option("--sparsity", ksvd_opts.sparsity, "coding sparsity");
  ksvd->add_option("--iterations", ksvd_opts.iterations, "outer iterations");
  ksvd->add_option("--seed", ksvd_opts.seed, "initialization seed");
  ksvd->add_option("--out", ksvd_out, "output directory");

  PlantedArgs coupled_data;
  MethodArgs coupled_method;
  coupled_method.method = "sapiro";
  coupled_method.m = 4;
  std::string coupled_y;
  double coupled_noise = 0.0;
  CoupledConfig coupled_cfg;
  coupled_cfg.atoms = 16;
  coupled_cfg.sparsity = 2;
  coupled_cfg.seed = 1;
  std::string coupled_out = "coupled_out";
  CLI::App* coupled =
      app.add_subcommand("coupled", "learn a dictionary and projection jointly");
  AddPlantedOptions(coupled, coupled_data);
  AddMethodOptions(coupled, coupled_method);
  coupled->add_option("--measurements", coupled_y, "measurements CSV (m x p)");
  coupled->add_option("--noise", coupled_noise,
                      "noise sigma when measurements are synthesized");
  coupled->add_option("--lambda", coupled_cfg.lambda, "signal term weight");
  coupled->add_option("--atoms", coupled_cfg.atoms, "dictionary atoms");
  coupled->add_option("--sparsity", coupled_cfg.sparsity, "coding sparsity");
  coupled->add_option("--outer-iterations", coupled_cfg.max_outer_iterations,
                      "outer iterations");
  coupled->add_option("--learn-seed", coupled_cfg.seed, "initialization seed");
  coupled->add_option("--out", coupled_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (design->parsed()) {
      RunDesign(design_dict, design_method, design_bins, design_out);
    } else if (bench->parsed()) {
      RunBench(bench_config, bench_paper, bench_out, bench_threads);
    } else if (hist->parsed()) {
      RunHist(hist_dict, hist_proj, hist_bins, hist_out);
    } else if (ksvd->parsed()) {
      const KsvdResult r = Ksvd(LoadTraining(ksvd_data), ksvd_opts);
      const fs::path out(ksvd_out);
      WriteMatrixCsv(out / "D.csv", r.dictionary.matrix());
      WriteMatrixCsv(out / "theta.csv", r.theta);
      std::ofstream trace = OpenForWrite(out / "trace.csv");
      WriteKsvdTraceCsv(trace, r.trace);
    } else if (coupled->parsed()) {
      TrainingSet training;
      training.x = LoadTraining(coupled_data);
      if (!coupled_y.empty()) training.y = ReadMatrixCsv(fs::path(coupled_y));
      training.noise_sigma = coupled_noise;
      coupled_cfg.projection = MakeDesign(coupled_method);
      const CoupledResult r = CoupledKsvd(training, coupled_cfg);
      const fs::path out(coupled_out);
      WriteMatrixCsv(out / "D.csv", r.dictionary.matrix());
      WriteMatrixCsv(out / "P.csv", r.projection.matrix());
      std::ofstream trace = OpenForWrite(out / "trace.csv");
      WriteCoupledTraceCsv(trace, r.trace);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
