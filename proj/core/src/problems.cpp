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

#include "dsclust/problems.hpp"

#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "dsclust/error.hpp"
#include "dsclust/rng.hpp"

namespace dsclust {

BenchmarkProblem generate_full_problem(int n, std::uint64_t seed) {
  if (n < 2 || n > kMaxFullProblemSize) {
    throw GuardError(fmt::format("full problem size {} outside [2, {}]", n,
                                 kMaxFullProblemSize));
  }
  const Frame frame(n);
  Rng rng(seed);
  BenchmarkProblem p{frame, {}, n, seed};
  p.evidence.reserve(frame.full_mask());
  for (Mask mask = 1; mask <= frame.full_mask(); ++mask) {
    p.evidence.emplace_back(Subset(frame, mask), rng.uniform01_open());
  }
  return p;
}

bool is_full_family(const BenchmarkProblem& problem) {
  const Mask full = problem.frame.full_mask();
  if (problem.evidence.size() != full) return false;
  std::vector<bool> seen(std::size_t{full} + 1, false);
  for (const auto& e : problem.evidence) {
    if (e.frame() != problem.frame || seen[e.focal().mask()]) return false;
    seen[e.focal().mask()] = true;
  }
  return true;
}

Partition canonical_zero_partition(const BenchmarkProblem& problem) {
  std::vector<std::size_t> assignment;
  assignment.reserve(problem.evidence.size());
  for (const auto& e : problem.evidence) {
    if (e.frame() != problem.frame) {
      throw FrameMismatch("evidence frame differs from the problem frame");
    }
    assignment.push_back(
        static_cast<std::size_t>(e.focal().min_element() - 1));
  }
  return Partition(std::move(assignment),
                   static_cast<std::size_t>(problem.frame.size()));
}

Partition random_partition(std::size_t evidence_count, std::size_t clusters,
                           std::uint64_t seed) {
  if (clusters == 0) throw DomainError("random partition into zero clusters");
  Rng rng(seed);
  std::vector<std::size_t> assignment(evidence_count);
  for (auto& a : assignment) {
    a = static_cast<std::size_t>(rng.below(clusters));
  }
  return Partition(std::move(assignment), clusters);
}

namespace {

class Enumerator {
 public:
  Enumerator(std::span<const SimpleSupport> evidence, std::size_t clusters,
             DomainConflict c0, bool prune_symmetry)
      : evidence_(evidence),
        clusters_(clusters),
        c0_(c0),
        prune_symmetry_(prune_symmetry),
        assignment_(evidence.size(), 0),
        conflicts_(clusters, 0.0) {
    const Frame frame = evidence.front().frame();
    stacks_.assign(clusters, {MassFunction::vacuous(frame)});
  }

  void run() { descend(0, 0); }

  std::optional<double> best_mcf;
  std::vector<std::size_t> best_assignment;
  std::uint64_t leaves = 0;

 private:
  void descend(std::size_t depth, std::size_t used) {
    const double partial = metaconflict_from_conflicts(conflicts_, c0_);
    if (best_mcf && partial >= *best_mcf) return;
    if (depth == evidence_.size()) {
      ++leaves;
      best_mcf = partial;
      best_assignment = assignment_;
      return;
    }
    const std::size_t limit =
        prune_symmetry_ ? std::min(clusters_, used + 1) : clusters_;
    for (std::size_t c = 0; c < limit; ++c) {
      assignment_[depth] = c;
      auto& stack = stacks_[c];
      stack.push_back(combine_conjunctive(stack.back(), evidence_[depth]));
      const double saved = conflicts_[c];
      // One member has no conflict; this mirrors cluster_conflict().
      conflicts_[c] = stack.size() > 2
                          ? quantize_conflict(stack.back().conflict_mass())
                          : 0.0;
      descend(depth + 1, std::max(used, c + 1));
      conflicts_[c] = saved;
      stack.pop_back();
    }
  }

  std::span<const SimpleSupport> evidence_;
  std::size_t clusters_;
  DomainConflict c0_;
  bool prune_symmetry_;
  std::vector<std::size_t> assignment_;
  std::vector<double> conflicts_;
  std::vector<std::vector<MassFunction>> stacks_;
};

}  // namespace

OracleResult brute_force_min(std::span<const SimpleSupport> evidence,
                             std::size_t clusters, DomainConflict c0,
                             bool prune_symmetry) {
  if (clusters == 0) throw DomainError("oracle over zero clusters");
  const double space = std::pow(static_cast<double>(clusters),
                                static_cast<double>(evidence.size()));
  if (space > kOracleBudget) {
    throw GuardError(fmt::format(
        "{}^{} assignments exceed the oracle budget of {:g}", clusters,
        evidence.size(), kOracleBudget));
  }
  if (evidence.empty()) {
    return {metaconflict_from_conflicts(std::vector<double>(clusters, 0.0), c0),
            Partition({}, clusters), 1};
  }
  require_common_frame(evidence);
  Enumerator e(evidence, clusters, c0, prune_symmetry);
  e.run();
  return {*e.best_mcf, Partition(std::move(e.best_assignment), clusters),
          e.leaves};
}

}  // namespace dsclust
