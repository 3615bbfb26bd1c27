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

#ifndef MMTEST_RESULT_TABLE_HPP_
#define MMTEST_RESULT_TABLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace mmtest {

// Rectangular numeric table. Entries are finite except explicit +inf
// markers (infinite divergences, the eta = inf end of an ROC sweep).
struct ResultTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> rows;
  // Lines written as "# meta: <line>" ahead of the header.
  std::vector<std::string> meta;

  // Throws kDimensionMismatch when the row width differs from the header.
  void add_row(std::vector<double> row);
  std::size_t column(const std::string& name) const;
  double at(std::size_t row, const std::string& name) const {
    return rows.at(row).at(column(name));
  }
};

// Header row, ',' separator, '.' decimal, LF endings, shortest round-trip
// number formatting.
std::string to_csv(const ResultTable& table);
ResultTable parse_csv(const std::string& text);
void write_csv(const std::string& path, const ResultTable& table);
ResultTable read_csv(const std::string& path);

}  // namespace mmtest

#endif  // MMTEST_RESULT_TABLE_HPP_
