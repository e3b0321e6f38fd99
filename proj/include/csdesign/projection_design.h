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

#ifndef CSDESIGN_PROJECTION_DESIGN_H_
#define CSDESIGN_PROJECTION_DESIGN_H_

#include <cstdint>
#include <string>
#include <variant>

#include "csdesign/altproj.h"
#include "csdesign/elad.h"
#include "csdesign/matrix_core.h"

namespace csdesign {

// Gaussian P, no optimization.
struct RandomProjectionConfig {
  int m = 1;
  uint64_t seed = 0;
};

struct SapiroConfig {
  int m = 1;
  uint64_t seed = 0;
};

using ProjectionDesign = std::variant<RandomProjectionConfig, EladConfig,
                                      SapiroConfig, AltProjConfig>;

// "none", "elad", "sapiro" or "altproj".
std::string DesignName(const ProjectionDesign& design);
int DesignMeasurements(const ProjectionDesign& design);
uint64_t DesignSeed(const ProjectionDesign& design);
ProjectionDesign WithSeed(ProjectionDesign design, uint64_t seed);

// Runs the configured optimizer on the dictionary and returns P only.
ProjectionMatrix DesignProjection(const Dictionary& dictionary,
                                  const ProjectionDesign& design);

}  // namespace csdesign

#endif  // CSDESIGN_PROJECTION_DESIGN_H_
