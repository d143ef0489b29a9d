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

#ifndef DSCLUST_RENDER_HPP_
#define DSCLUST_RENDER_HPP_

#include <string>
#include <string_view>

#include "dsclust/matrix.hpp"

namespace dsclust {

// Ramp level 0..4 of an output voltage: min(4, floor(5 * v)), v clamped to
// [0, 1].
int ramp_level(double v);

// One line per row, one glyph per column from " ░▒▓█" (UTF-8).
std::string render_grid(const Matrix& v);

// Rows as comma-separated values with 17 significant digits.
std::string matrix_to_csv(const Matrix& v);
// Throws FormatError on ragged or non-numeric input.
Matrix matrix_from_csv(std::string_view text);

}  // namespace dsclust

#endif  // DSCLUST_RENDER_HPP_
