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

#include "csdesign/csv_io.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include "gtest/gtest.h"

#include "csdesign/errors.h"
#include "csdesign/random.h"

namespace csdesign {
namespace {

TEST(FormatDouble, RoundTripsExactly) {
  Rng rng(5);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 2000; ++i) {
    const double v = normal(rng) * std::pow(10.0, (i % 41) - 20);
    EXPECT_EQ(ParseDouble(FormatDouble(v)), v);
  }
  EXPECT_EQ(ParseDouble(FormatDouble(0.1)), 0.1);
  EXPECT_EQ(FormatDouble(1.0).find(','), std::string::npos);
}

TEST(ParseDouble, RejectsGarbage) {
  EXPECT_THROW(ParseDouble("1.5x"), IoError);
  EXPECT_THROW(ParseDouble(""), IoError);
  EXPECT_DOUBLE_EQ(ParseDouble(" 2.5 "), 2.5);
}

TEST(ParseUnsigned, HandlesFullRange) {
  const uint64_t big = std::numeric_limits<uint64_t>::max();
  EXPECT_EQ(ParseUnsigned(std::to_string(big)), big);
  EXPECT_THROW(ParseUnsigned("-1"), IoError);
  EXPECT_EQ(ParseInteger("-12"), -12);
}

TEST(SplitCsvLine, SplitsFields) {
  const auto f = SplitCsvLine("a,b,,c");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[2], "");
  EXPECT_EQ(f[3], "c");
}

TEST(MatrixCsv, StreamRoundTrip) {
  const Eigen::MatrixXd m = GaussianMatrix(7, 4, uint64_t{3});
  std::stringstream ss;
  WriteMatrixCsv(ss, m);
  EXPECT_EQ(ss.str().find('\r'), std::string::npos);
  EXPECT_EQ(ReadMatrixCsv(ss), m);
}

TEST(MatrixCsv, FileRoundTripCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "csdesign_csv_io";
  std::filesystem::remove_all(dir);
  const Eigen::MatrixXd m = GaussianMatrix(3, 5, uint64_t{4});
  WriteMatrixCsv(dir / "nested" / "m.csv", m);
  EXPECT_EQ(ReadMatrixCsv(dir / "nested" / "m.csv"), m);
  std::filesystem::remove_all(dir);
}

TEST(MatrixCsv, RaggedRowsRejected) {
  std::stringstream ss("1,2\n3\n");
  EXPECT_THROW(ReadMatrixCsv(ss), IoError);
}

TEST(MatrixCsv, MissingFileRejected) {
  EXPECT_THROW(ReadMatrixCsv(std::filesystem::path("/nonexistent/m.csv")),
               IoError);
}

}  // namespace
}  // namespace csdesign
