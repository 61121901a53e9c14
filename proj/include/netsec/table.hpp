// Copyright 2026 The netsec Authors
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

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace netsec {

using Cell = std::variant<std::string, long long, double>;

// Column-named rows, written as CSV with a header line.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Throws InvalidParameter for an unknown column.
  int column_index(std::string_view name) const;
  double number(size_t row, std::string_view column) const;
  std::vector<double> numbers(std::string_view column) const;
};

// Twelve significant digits, "%.12g".
std::string format_number(double x);

void write_csv(std::ostream& os, const Table& table);

// Minimal self-contained SVG line chart of `ys` against `x`.
void write_svg_chart(std::ostream& os, const Table& table, std::string_view x,
                     const std::vector<std::string>& ys, std::string_view title);

}  // namespace netsec
