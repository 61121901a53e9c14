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

#include "netsec/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "netsec/error.hpp"

namespace netsec {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return format_number(std::get<double>(c));
}

double cell_number(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

int Table::column_index(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidParameter("no column '" + std::string(name) + "'");
  return static_cast<int>(it - columns.begin());
}

double Table::number(size_t row, std::string_view column) const {
  return cell_number(rows.at(row).at(column_index(column)));
}

std::vector<double> Table::numbers(std::string_view column) const {
  const int c = column_index(column);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(cell_number(r.at(c)));
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  for (size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

void write_svg_chart(std::ostream& os, const Table& table, std::string_view x,
                     const std::vector<std::string>& ys, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 420, kLeft = 60, kRight = 150, kTop = 40, kBottom = 50;
  const auto xs = table.numbers(x);
  double x_min = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
  double x_max = xs.empty() ? 1.0 : *std::max_element(xs.begin(), xs.end());
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -y_min;
  for (const auto& y : ys) {
    for (double v : table.numbers(y)) {
      if (!std::isfinite(v)) continue;
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (!std::isfinite(y_min)) y_min = 0.0, y_max = 1.0;
  if (y_max - y_min < 1e-12) y_max = y_min + 1.0;
  if (x_max - x_min < 1e-12) x_max = x_min + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (v - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double v) { return kTop + (1.0 - (v - y_min) / (y_max - y_min)) * plot_h; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << title << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
     << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x_min + (x_max - x_min) * t / 4.0;
    const double yv = y_min + (y_max - y_min) * t / 4.0;
    os << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">"
       << format_number(xv) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">"
       << format_number(yv) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\">" << x << "</text>\n";

  for (size_t k = 0; k < ys.size(); ++k) {
    const auto values = table.numbers(ys[k]);
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t r = 0; r < values.size(); ++r) {
      if (!std::isfinite(values[r])) continue;
      os << format_number(sx(xs[r])) << ',' << format_number(sy(values[r])) << ' ';
    }
    os << "\"/>\n";
    const double ly = kTop + 14 + 18.0 * k;
    os << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly << "\" x2=\""
       << kWidth - kRight + 30 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kWidth - kRight + 36 << "\" y=\"" << ly + 4 << "\">" << ys[k]
       << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace netsec
