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

#ifndef DSCLUST_PROBLEM_IO_HPP_
#define DSCLUST_PROBLEM_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "dsclust/problems.hpp"

namespace dsclust {

// Problem file:
//   {"frame_size": n,
//    "evidence": [{"focal": [sorted 1-based elements], "mass": m}, ...],
//    "n_clusters": r,
//    "seed": s}
// Masses are printed with 17 significant digits, one evidence per line.
std::string problem_to_json(const BenchmarkProblem& problem);

// Throws FormatError on malformed input and the evidence errors on invalid
// focal sets or masses.
BenchmarkProblem problem_from_json(std::string_view text);

void save_problem(const BenchmarkProblem& problem,
                  const std::filesystem::path& path);
BenchmarkProblem load_problem(const std::filesystem::path& path);

// Shared helpers for the CLI and tests.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace dsclust

#endif  // DSCLUST_PROBLEM_IO_HPP_
