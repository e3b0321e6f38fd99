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

#include "csdesign/projection_design.h"

#include "csdesign/random.h"
#include "csdesign/sapiro.h"

namespace csdesign {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string DesignName(const ProjectionDesign& design) {
  return std::visit(
      Overloaded{[](const RandomProjectionConfig&) { return "none"; },
                 [](const EladConfig&) { return "elad"; },
                 [](const SapiroConfig&) { return "sapiro"; },
                 [](const AltProjConfig&) { return "altproj"; }},
      design);
}

int DesignMeasurements(const ProjectionDesign& design) {
  return std::visit([](const auto& cfg) { return cfg.m; }, design);
}

uint64_t DesignSeed(const ProjectionDesign& design) {
  return std::visit([](const auto& cfg) { return cfg.seed; }, design);
}

ProjectionDesign WithSeed(ProjectionDesign design, uint64_t seed) {
  std::visit([seed](auto& cfg) { cfg.seed = seed; }, design);
  return design;
}

ProjectionMatrix DesignProjection(const Dictionary& dictionary,
                                  const ProjectionDesign& design) {
  return std::visit(
      Overloaded{
          [&](const RandomProjectionConfig& cfg) {
            return ProjectionMatrix(
                GaussianMatrix(cfg.m, dictionary.signal_dim(), cfg.seed));
          },
          [&](const EladConfig& cfg) {
            return EladOptimize(dictionary, cfg).projection;
          },
          [&](const SapiroConfig& cfg) {
            return SapiroOptimize(dictionary, cfg.m, cfg.seed).projection;
          },
          [&](const AltProjConfig& cfg) {
            return AltProjOptimize(dictionary, cfg).projection;
          }},
      design);
}

}  // namespace csdesign
