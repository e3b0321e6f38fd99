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

// Test-only helpers that build effective dictionaries with controlled
// coherence.

#ifndef CSDESIGN_TESTS_TEST_FRAMES_H_
#define CSDESIGN_TESTS_TEST_FRAMES_H_

#include <cstdint>

#include <Eigen/Dense>

#include "csdesign/altproj.h"
#include "csdesign/matrix_core.h"

namespace csdesign::testing {

// n x k frame whose Gram is the AltProj fixed point for threshold t.
inline Eigen::MatrixXd LowCoherenceFrame(int n, int k, double t,
                                         uint64_t seed) {
  Eigen::MatrixXd g = InitialAltProjGram(k, seed);
  for (int iter = 0; iter < 400; ++iter) {
    g = ProjectRank(ProjectConvex(g, t), n);
  }
  return SqrtFactor(NormalizeGram(g).matrix(), n);
}

}  // namespace csdesign::testing

#endif  // CSDESIGN_TESTS_TEST_FRAMES_H_
