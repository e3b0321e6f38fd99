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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "csdesign/errors.h"

namespace csdesign {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

double ParseDouble(std::string_view token) {
  token = Trim(token);
  if (token == "nan") return std::nan("");
  if (token == "inf") return HUGE_VAL;
  if (token == "-inf") return -HUGE_VAL;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto result =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || result.ec != std::errc() ||
      result.ptr != token.data() + token.size()) {
    throw IoError("cannot parse number '" + std::string(token) + "'");
  }
  return value;
}

long long ParseInteger(std::string_view token) {
  token = Trim(token);
  long long value = 0;
  const auto result =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || result.ec != std::errc() ||
      result.ptr != token.data() + token.size()) {
    throw IoError("cannot parse integer '" + std::string(token) + "'");
  }
  return value;
}

unsigned long long ParseUnsigned(std::string_view token) {
  token = Trim(token);
  unsigned long long value = 0;
  const auto result =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || result.ec != std::errc() ||
      result.ptr != token.data() + token.size()) {
    throw IoError("cannot parse unsigned integer '" + std::string(token) +
                  "'");
  }
  return value;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    const std::string_view field = line.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    fields.emplace_back(Trim(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(m(i, j));
    }
    out << '\n';
  }
}

void WriteMatrixCsv(const std::filesystem::path& path,
                    const Eigen::MatrixXd& m) {
  std::ofstream out = OpenForWrite(path);
  WriteMatrixCsv(out, m);
  if (!out) throw IoError("write failed: " + path.string());
}

Eigen::MatrixXd ReadMatrixCsv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& field : SplitCsvLine(line)) {
      try {
        row.push_back(ParseDouble(field));
      } catch (const IoError& e) {
        throw IoError("line " + std::to_string(line_number) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError("line " + std::to_string(line_number) + " has " +
                    std::to_string(row.size()) + " fields, expected " +
                    std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("matrix file is empty");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Eigen::MatrixXd ReadMatrixCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return ReadMatrixCsv(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " +
                    path.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace csdesign
