// Copyright 2026 The mmtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmtest/result_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

constexpr const char* kMetaPrefix = "# meta: ";

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& token, int line_no) {
  if (token == "inf") return INFINITY;
  if (token == "-inf") return -INFINITY;
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": bad number '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != column_names.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row has " + std::to_string(row.size()) + " entries, table has " +
                    std::to_string(column_names.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::size_t ResultTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < column_names.size(); ++i) {
    if (column_names[i] == name) return i;
  }
  throw Error(ErrorCode::kDimensionMismatch, "no column named '" + name + "'");
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (const std::string& m : table.meta) {
    out += kMetaPrefix;
    out += m;
    out += '\n';
  }
  for (std::size_t i = 0; i < table.column_names.size(); ++i) {
    if (i > 0) out += ',';
    out += table.column_names[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

ResultTable parse_csv(const std::string& text) {
  ResultTable table;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int line_no = 0;
  const std::string prefix = kMetaPrefix;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(prefix, 0) == 0) {
      table.meta.push_back(line.substr(prefix.size()));
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      table.column_names = split(line);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& token : split(line)) {
      row.push_back(parse_number(token, line_no));
    }
    if (row.size() != table.column_names.size()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + " is not rectangular");
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "missing header row");
  return table;
}

void write_csv(const std::string& path, const ResultTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << to_csv(table);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

ResultTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

}  // namespace mmtest
