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

#ifndef DSCLUST_HILLCLIMB_HPP_
#define DSCLUST_HILLCLIMB_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/partition_metrics.hpp"

// Iterative optimization by single-evidence transfers between clusters.
namespace dsclust::hillclimb {

// Effect of moving evidence `evidence` from cluster `source` to `target`.
// Starred conflicts are refolded from scratch over the post-transfer
// membership, so mcf_star equals metaconflict() of the moved partition
// bit for bit.
struct TransferEval {
  std::size_t evidence = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  double c_source = 0.0;
  double c_source_star = 0.0;
  double c_target = 0.0;
  double c_target_star = 0.0;
  double mcf = 0.0;
  double mcf_star = 0.0;
};

// Throws DomainError when q or j is out of range or j is q's own cluster.
TransferEval evaluate_transfer(const Partition& p,
                               std::span<const SimpleSupport> evidence,
                               std::size_t q, std::size_t j,
                               DomainConflict c0 = {});

// (1 - c_j*) / (1 - c_j) > (1 - c_i) / (1 - c_i*): the transfer lowers the
// metaconflict. Arguments must lie in [0,1) after the conflict ceiling.
bool is_favorable(double c_i, double c_i_star, double c_j, double c_j_star);

// Favorable transfer with the least mcf_star; ties go to the lowest evidence
// index, then the lowest target cluster. Empty when none is favorable.
std::optional<TransferEval> best_transfer(
    const Partition& p, std::span<const SimpleSupport> evidence,
    DomainConflict c0 = {});

struct ClimbOptions {
  std::size_t max_sweeps = 100000;
  // Wall-clock budget; the run stops (truncated) once it is spent.
  std::optional<std::chrono::nanoseconds> time_budget;
};

struct ClimbResult {
  Partition final_partition;
  double final_mcf = 0.0;
  std::size_t accepted_transfers = 0;
  // Full scans over all (evidence, target) pairs, including the last one
  // that found nothing favorable.
  std::size_t sweeps = 0;
  // Metaconflict of the initial partition followed by one value per
  // accepted transfer.
  std::vector<double> trajectory;
  bool truncated = false;
};

ClimbResult optimize(const Partition& initial,
                     std::span<const SimpleSupport> evidence,
                     DomainConflict c0 = {}, const ClimbOptions& options = {});

}  // namespace dsclust::hillclimb

#endif  // DSCLUST_HILLCLIMB_HPP_
