// Copyright 2026 The dsclust Authors.
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

#include "dsclust/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "dsclust/error.hpp"

namespace dsclust {

namespace {

constexpr std::array<std::string_view, 5> kRamp = {" ", "░", "▒", "▓", "█"};

}  // namespace

int ramp_level(double v) {
  const double x = std::clamp(v, 0.0, 1.0);
  return std::min(4, static_cast<int>(std::floor(5.0 * x)));
}

std::string render_grid(const Matrix& v) {
  std::string out;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    for (double x : v.row(r)) out += kRamp[static_cast<std::size_t>(ramp_level(x))];
    out += '\n';
  }
  return out;
}

std::string matrix_to_csv(const Matrix& v) {
  std::string out;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const auto row = v.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += fmt::format("{}{:.17g}", c == 0 ? "" : ",", row[c]);
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      const auto cell = line.substr(start, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - start);
      double x = 0;
      const auto* cell_end = cell.data() + cell.size();
      const auto [ptr, ec] = std::from_chars(cell.data(), cell_end, x);
      if (ec != std::errc() || ptr != cell_end) {
        throw FormatError(fmt::format("bad matrix cell '{}'", cell));
      }
      row.push_back(x);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw FormatError("ragged matrix rows");
    }
    rows.push_back(std::move(row));
  }
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

}  // namespace dsclust
