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

#include "dsclust/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dsclust/error.hpp"
#include "json.hpp"

namespace dsclust {

std::string problem_to_json(const BenchmarkProblem& problem) {
  std::string out = fmt::format("{{\"frame_size\": {},\n \"evidence\": [",
                                problem.frame.size());
  for (std::size_t i = 0; i < problem.evidence.size(); ++i) {
    const auto& e = problem.evidence[i];
    out += fmt::format("{}\n  {{\"focal\": [{}], \"mass\": {:.17g}}}",
                       i == 0 ? "" : ",",
                       fmt::join(e.focal().elements(), ", "), e.mass());
  }
  out += fmt::format("\n ],\n \"n_clusters\": {},\n \"seed\": {}}}\n",
                     problem.n_clusters, problem.seed);
  return out;
}

BenchmarkProblem problem_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(fmt::format("problem file: {}", e.what()));
  }
  try {
    const Frame frame(doc.at("frame_size").get<int>());
    BenchmarkProblem p{frame, {}, doc.at("n_clusters").get<int>(),
                       doc.value("seed", std::uint64_t{0})};
    if (p.n_clusters < 1) {
      throw FormatError(fmt::format("n_clusters = {}", p.n_clusters));
    }
    for (const auto& item : doc.at("evidence")) {
      const auto elements = item.at("focal").get<std::vector<int>>();
      p.evidence.emplace_back(Subset::of(frame, elements),
                              item.at("mass").get<double>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("problem file: {}", e.what()));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError(fmt::format("write to {} failed", path.string()));
}

void save_problem(const BenchmarkProblem& problem,
                  const std::filesystem::path& path) {
  write_file(path, problem_to_json(problem));
}

BenchmarkProblem load_problem(const std::filesystem::path& path) {
  return problem_from_json(read_file(path));
}

}  // namespace dsclust
