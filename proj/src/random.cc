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

#include "csdesign/random.h"

namespace csdesign {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint64_t DeriveSeed(uint64_t master_seed, std::string_view tag, uint64_t a,
                    uint64_t b) {
  uint64_t h = SplitMix64(master_seed);
  h = SplitMix64(h ^ Fnv1a(tag));
  h = SplitMix64(h ^ a);
  h = SplitMix64(h ^ b);
  return h;
}

Eigen::MatrixXd GaussianMatrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      m(i, j) = normal(rng);
    }
  }
  return m;
}

Eigen::MatrixXd GaussianMatrix(int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  return GaussianMatrix(rows, cols, rng);
}

}  // namespace csdesign
