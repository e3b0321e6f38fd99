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

#ifndef CSDESIGN_RANDOM_H_
#define CSDESIGN_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Core>

namespace csdesign {

using Rng = std::mt19937_64;

// Stable 64-bit seed derived from a master seed, a stage tag and two indices.
// The same inputs give the same seed on every platform and run.
uint64_t DeriveSeed(uint64_t master_seed, std::string_view tag, uint64_t a = 0,
                    uint64_t b = 0);

// i.i.d. N(0, 1) entries, filled in column-major order.
Eigen::MatrixXd GaussianMatrix(int rows, int cols, Rng& rng);
Eigen::MatrixXd GaussianMatrix(int rows, int cols, uint64_t seed);

}  // namespace csdesign

#endif  // CSDESIGN_RANDOM_H_
