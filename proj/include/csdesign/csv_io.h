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

#ifndef CSDESIGN_CSV_IO_H_
#define CSDESIGN_CSV_IO_H_

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace csdesign {

// Shortest decimal form that reads back to the identical double ("%.17g"
// precision), with '.' as decimal separator regardless of locale.
std::string FormatDouble(double value);

// Parses a full decimal token; throws IoError on trailing garbage.
double ParseDouble(std::string_view token);
long long ParseInteger(std::string_view token);
unsigned long long ParseUnsigned(std::string_view token);

std::vector<std::string> SplitCsvLine(std::string_view line);

// Matrix files are plain CSV, one row per line, no header, LF endings.
void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& m);
void WriteMatrixCsv(const std::filesystem::path& path,
                    const Eigen::MatrixXd& m);
Eigen::MatrixXd ReadMatrixCsv(std::istream& in);
Eigen::MatrixXd ReadMatrixCsv(const std::filesystem::path& path);

// Opens a file for writing in binary mode (LF line endings), creating parent
// directories. Throws IoError with the path on failure.
std::ofstream OpenForWrite(const std::filesystem::path& path);

}  // namespace csdesign

#endif  // CSDESIGN_CSV_IO_H_
