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

#ifndef DSCLUST_PROBLEMS_HPP_
#define DSCLUST_PROBLEMS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/partition_metrics.hpp"

namespace dsclust {

struct BenchmarkProblem {
  Frame frame;
  std::vector<SimpleSupport> evidence;
  int n_clusters = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const BenchmarkProblem&,
                         const BenchmarkProblem&) = default;
};

inline constexpr int kMaxFullProblemSize = 12;

// One simple support per nonempty subset of {1..n}, in ascending mask order,
// with masses drawn by Rng(seed).uniform01_open(). n_clusters = n.
BenchmarkProblem generate_full_problem(int n, std::uint64_t seed);

// True when the focal sets enumerate every nonempty subset exactly once.
bool is_full_family(const BenchmarkProblem& problem);

// Evidence e goes to cluster min(focal(e)) - 1, over frame.size clusters.
// Every cluster then shares its defining element, so a full-family problem
// has metaconflict 0.
Partition canonical_zero_partition(const BenchmarkProblem& problem);

// Each evidence uniformly in [0, r), drawn in index order by Rng(seed).
Partition random_partition(std::size_t evidence_count, std::size_t clusters,
                           std::uint64_t seed);

struct OracleResult {
  double min_metaconflict = 0.0;
  Partition argmin;
  std::uint64_t leaves = 0;
};

inline constexpr double kOracleBudget = 1e7;

// Exact minimum metaconflict over all assignments to r clusters.
//
// Enumeration is depth-first in lexicographic order with per-cluster mass
// functions extended incrementally; branches whose partial metaconflict
// already reaches the incumbent are cut (conflicts only grow as evidence is
// added). With `prune_symmetry`, evidence i may open at most cluster
// max(previous) + 1, which removes relabelings. The minimizer returned is the
// lexicographically first among those enumerated.
//
// Throws GuardError when r^N exceeds kOracleBudget.
OracleResult brute_force_min(std::span<const SimpleSupport> evidence,
                             std::size_t clusters, DomainConflict c0 = {},
                             bool prune_symmetry = true);

}  // namespace dsclust

#endif  // DSCLUST_PROBLEMS_HPP_
