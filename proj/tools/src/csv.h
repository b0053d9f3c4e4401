// Copyright 2026 The qkdkr Authors
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


#ifndef QKDKR_TOOLS_CSV_H_
#define QKDKR_TOOLS_CSV_H_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qkdkr::cli {

// Reproducibility header written as '#'-prefixed lines before the column
// header.
struct RunManifest {
  std::string command;
  std::string config;
  std::string grid;
  std::string output_path;
  unsigned long long seed = 0;
  std::string tool_version;
};

// 12 significant digits, "nan"/"inf" for non-finite values.
std::string FormatNumber(double v);

class CsvWriter {
 public:
  CsvWriter(RunManifest manifest, std::vector<std::string> columns);

  void AddRow(const std::vector<double>& values);
  std::size_t rows() const { return rows_.size(); }

  // Manifest comments, header, body.
  std::string Render() const;
  // Body only (header line plus rows), the part covered by determinism checks.
  std::string RenderBody() const;
  // Writes Render() to manifest.output_path; throws std::runtime_error on I/O
  // failure.
  void Write() const;

 private:
  RunManifest manifest_;
  std::vector<std::string> columns_;
  std::vector<std::string> rows_;
};

// Reads a numeric CSV (skipping '#' lines). Returns the header and rows.
// Throws std::runtime_error naming the line on malformed input.
std::pair<std::vector<std::string>, std::vector<std::vector<double>>> ReadNumericCsv(
    const std::filesystem::path& path);

}  // namespace qkdkr::cli

#endif  // QKDKR_TOOLS_CSV_H_
