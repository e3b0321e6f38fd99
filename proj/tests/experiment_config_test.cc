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

#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "csdesign/errors.h"

namespace csdesign {
namespace {

ExperimentConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseExperimentConfig(in);
}

TEST(ParseExperimentConfig, DefaultsAreDeskScale) {
  const ExperimentConfig cfg = Parse("");
  EXPECT_EQ(cfg.n, 50);
  EXPECT_EQ(cfg.k, 100);
  EXPECT_EQ(cfg.m, 12);
  EXPECT_EQ(cfg.trials, 300);
  EXPECT_EQ(cfg.sparsity_levels, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(cfg.failure_threshold, 1e-4);
  EXPECT_EQ(cfg.solver, SolverChoice::kBoth);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(ParseExperimentConfig, AllKeys) {
  const ExperimentConfig cfg = Parse(
      "# comment line\n"
      "n = 20   # trailing comment\n"
      "k = 40\n"
      "m = 8\n"
      "S_range = 1..3\n"
      "N = 15\n"
      "dictionary_source = gaussian:99\n"
      "optimizers = none, altproj\n"
      "solver = omp\n"
      "failure_threshold = 1e-3\n"
      "master_seed = 18446744073709551615\n"
      "hist_bins = 20\n"
      "elad.threshold = fixed:0.4\n"
      "elad.gamma = 0.5\n"
      "elad.iterations = 7\n"
      "altproj.t = 0.35\n"
      "altproj.iterations = 9\n"
      "altproj.seed = 12\n");
  EXPECT_EQ(cfg.n, 20);
  EXPECT_EQ(cfg.k, 40);
  EXPECT_EQ(cfg.m, 8);
  EXPECT_EQ(cfg.sparsity_levels, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(cfg.trials, 15);
  EXPECT_EQ(cfg.dictionary_seed, 99u);
  EXPECT_EQ(cfg.optimizers, (std::vector<std::string>{"none", "altproj"}));
  EXPECT_EQ(cfg.solver, SolverChoice::kOmp);
  EXPECT_EQ(cfg.failure_threshold, 1e-3);
  EXPECT_EQ(cfg.master_seed, 18446744073709551615ull);
  EXPECT_EQ(cfg.hist_bins, 20);
  ASSERT_TRUE(std::holds_alternative<FixedThreshold>(cfg.elad_threshold));
  EXPECT_EQ(std::get<FixedThreshold>(cfg.elad_threshold).t, 0.4);
  EXPECT_EQ(cfg.elad_gamma, 0.5);
  EXPECT_EQ(cfg.elad_iterations, 7);
  EXPECT_EQ(cfg.altproj_t, 0.35);
  EXPECT_EQ(cfg.altproj_iterations, 9);
  EXPECT_EQ(cfg.altproj_seed, 12u);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(ParseExperimentConfig, SparsityList) {
  EXPECT_EQ(Parse("S_range = 2, 5,3\n").sparsity_levels,
            (std::vector<int>{2, 5, 3}));
}

TEST(ParseExperimentConfig, FileSource) {
  const ExperimentConfig cfg = Parse("dictionary_source = file:/tmp/d.csv\n");
  EXPECT_EQ(cfg.dictionary_file, "/tmp/d.csv");
}

TEST(ParseExperimentConfig, UnknownKeyNamesLine) {
  try {
    Parse("n = 5\n\nbogus = 1\n");
    FAIL() << "expected an error";
  } catch (const InvalidArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(ParseExperimentConfig, RejectsMalformedInput) {
  EXPECT_THROW(Parse("n = 5\nn = 6\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("n 5\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("n = five\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("solver = lasso\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("optimizers = none, magic\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("elad.threshold = 0.3\n"), InvalidArgumentError);
  EXPECT_THROW(Parse("dictionary_source = uniform\n"), InvalidArgumentError);
}

TEST(ExperimentConfig, ValidateInvariants) {
  ExperimentConfig cfg;
  cfg.sparsity_levels = {12};
  EXPECT_THROW(cfg.Validate(), InvalidArgumentError);
  cfg.sparsity_levels = {};
  EXPECT_THROW(cfg.Validate(), InvalidArgumentError);
  cfg.sparsity_levels = {1};
  cfg.trials = 0;
  EXPECT_THROW(cfg.Validate(), InvalidArgumentError);
  cfg.trials = 1;
  cfg.optimizers = {"none", "none"};
  EXPECT_THROW(cfg.Validate(), InvalidArgumentError);
  cfg.optimizers = {"none"};
  cfg.m = 60;
  EXPECT_THROW(cfg.Validate(), InvalidArgumentError);
}

TEST(ExperimentConfig, ResolveSeedsIsDeterministicAndDistinct) {
  ExperimentConfig a = Parse("master_seed = 5\n");
  ExperimentConfig b = Parse("master_seed = 5\n");
  a.ResolveSeeds();
  b.ResolveSeeds();
  EXPECT_EQ(FormatExperimentConfig(a), FormatExperimentConfig(b));
  ASSERT_TRUE(a.dictionary_seed && a.none_seed && a.elad_seed &&
              a.sapiro_seed && a.altproj_seed);
  EXPECT_NE(*a.none_seed, *a.elad_seed);
  EXPECT_NE(*a.sapiro_seed, *a.altproj_seed);
  ExperimentConfig c = Parse("master_seed = 6\n");
  c.ResolveSeeds();
  EXPECT_NE(*a.dictionary_seed, *c.dictionary_seed);
}

TEST(ExperimentConfig, ExplicitSeedsSurviveResolution) {
  ExperimentConfig cfg = Parse("elad.seed = 3\ndictionary_source = gaussian:4\n");
  cfg.ResolveSeeds();
  EXPECT_EQ(cfg.elad_seed, 3u);
  EXPECT_EQ(cfg.dictionary_seed, 4u);
}

TEST(FormatExperimentConfig, RoundTrips) {
  ExperimentConfig cfg = Parse(
      "n = 12\nk = 30\nm = 6\nS_range = 1,4\nN = 9\noptimizers = sapiro,none\n"
      "solver = bp\nelad.threshold = relative:30\nfailure_threshold = 0.001\n");
  cfg.ResolveSeeds();
  const std::string text = FormatExperimentConfig(cfg);
  EXPECT_EQ(FormatExperimentConfig(Parse(text)), text);
}

TEST(ApplyPaperScale, SetsLargeConfiguration) {
  ExperimentConfig cfg;
  ApplyPaperScale(cfg);
  EXPECT_EQ(cfg.n, 200);
  EXPECT_EQ(cfg.k, 400);
  EXPECT_EQ(cfg.m, 30);
  EXPECT_EQ(cfg.trials, 10000);
  EXPECT_EQ(cfg.sparsity_levels.size(), 10u);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(ReadExperimentConfig, MissingFile) {
  EXPECT_THROW(ReadExperimentConfig("/nonexistent/cfg.txt"), IoError);
}

}  // namespace
}  // namespace csdesign
