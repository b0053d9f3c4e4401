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


#include "csv.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qkdkr::cli {

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

CsvWriter::CsvWriter(RunManifest manifest, std::vector<std::string> columns)
    : manifest_(std::move(manifest)), columns_(std::move(columns)) {}

void CsvWriter::AddRow(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("CsvWriter: row has " + std::to_string(values.size()) +
                                " values, header has " + std::to_string(columns_.size()));
  }
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += FormatNumber(values[i]);
  }
  rows_.push_back(std::move(line));
}

std::string CsvWriter::RenderBody() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const std::string& r : rows_) out += r + '\n';
  return out;
}

std::string CsvWriter::Render() const {
  std::ostringstream os;
  os << "# command: " << manifest_.command << '\n'
     << "# config: " << manifest_.config << '\n'
     << "# grid: " << manifest_.grid << '\n'
     << "# output: " << manifest_.output_path << '\n'
     << "# seed: " << manifest_.seed << '\n'
     << "# tool_version: " << manifest_.tool_version << '\n';
  return os.str() + RenderBody();
}

void CsvWriter::Write() const {
  std::ofstream out(manifest_.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + manifest_.output_path + " for writing");
  out << Render();
  if (!out) throw std::runtime_error("write failed: " + manifest_.output_path);
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> ReadNumericCsv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    if (cells.size() != header.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(header.size()) + " fields");
    }
    std::vector<double> row;
    for (const std::string& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (end == c.c_str() || *end != '\0') {
        throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                 ": not a number: '" + c + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw std::runtime_error(path.string() + ": no header line");
  return {std::move(header), std::move(rows)};
}

}  // namespace qkdkr::cli
