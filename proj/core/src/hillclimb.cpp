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

#include "dsclust/hillclimb.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "dsclust/error.hpp"

namespace dsclust::hillclimb {

namespace {

// Partition plus per-cluster member lists and conflicts.
class ClimbState {
 public:
  ClimbState(const Partition& p, std::span<const SimpleSupport> evidence,
             DomainConflict c0)
      : evidence_(evidence),
        c0_(c0),
        assignment_(p.assignment().begin(), p.assignment().end()),
        members_(p.clusters()) {
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      members_[assignment_[i]].push_back(i);
    }
    conflicts_.reserve(members_.size());
    for (const auto& m : members_) {
      conflicts_.push_back(cluster_conflict(evidence_, m));
    }
    mcf_ = metaconflict_from_conflicts(conflicts_, c0_);
  }

  double mcf() const { return mcf_; }
  std::size_t clusters() const { return members_.size(); }

  Partition partition() const { return Partition(assignment_, clusters()); }

  double conflict_without(std::size_t q) const {
    const auto& src = members_[assignment_[q]];
    scratch_.clear();
    for (std::size_t idx : src) {
      if (idx != q) scratch_.push_back(idx);
    }
    return cluster_conflict(evidence_, scratch_);
  }

  double conflict_with(std::size_t q, std::size_t j) const {
    const auto& dst = members_[j];
    if (dst.empty()) return 0.0;
    scratch_.assign(dst.begin(), dst.end());
    scratch_.insert(std::upper_bound(scratch_.begin(), scratch_.end(), q), q);
    return cluster_conflict(evidence_, scratch_);
  }

  TransferEval make_eval(std::size_t q, std::size_t j, double ci_star,
                         double cj_star) const {
    const std::size_t i = assignment_[q];
    double survive = 1.0 - c0_.value();
    for (std::size_t k = 0; k < conflicts_.size(); ++k) {
      const double c = k == i ? ci_star : k == j ? cj_star : conflicts_[k];
      survive *= 1.0 - c;
    }
    return TransferEval{q,           i,         j,   conflicts_[i], ci_star,
                        conflicts_[j], cj_star, mcf_, 1.0 - survive};
  }

  std::optional<TransferEval> best() const {
    std::optional<TransferEval> winner;
    for (std::size_t q = 0; q < assignment_.size(); ++q) {
      const std::size_t i = assignment_[q];
      const double ci_star = conflict_without(q);
      for (std::size_t j = 0; j < clusters(); ++j) {
        if (j == i) continue;
        auto eval = make_eval(q, j, ci_star, conflict_with(q, j));
        if (eval.mcf_star < mcf_ &&
            (!winner || eval.mcf_star < winner->mcf_star)) {
          winner = eval;
        }
      }
    }
    return winner;
  }

  void apply(const TransferEval& t) {
    auto& src = members_[t.source];
    src.erase(std::find(src.begin(), src.end(), t.evidence));
    auto& dst = members_[t.target];
    dst.insert(std::upper_bound(dst.begin(), dst.end(), t.evidence),
               t.evidence);
    assignment_[t.evidence] = t.target;
    conflicts_[t.source] = t.c_source_star;
    conflicts_[t.target] = t.c_target_star;
    mcf_ = t.mcf_star;
  }

 private:
  std::span<const SimpleSupport> evidence_;
  DomainConflict c0_;
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<double> conflicts_;
  double mcf_ = 0.0;
  mutable std::vector<std::size_t> scratch_;
};

void check_inputs(const Partition& p, std::span<const SimpleSupport> evidence) {
  if (p.size() != evidence.size()) {
    throw LengthMismatch(fmt::format("partition of {} for {} evidence",
                                     p.size(), evidence.size()));
  }
  require_common_frame(evidence);
}

}  // namespace

TransferEval evaluate_transfer(const Partition& p,
                               std::span<const SimpleSupport> evidence,
                               std::size_t q, std::size_t j,
                               DomainConflict c0) {
  check_inputs(p, evidence);
  if (q >= p.size()) {
    throw DomainError(fmt::format("evidence index {} out of range", q));
  }
  if (j >= p.clusters()) {
    throw DomainError(fmt::format("target cluster {} out of range", j));
  }
  if (j == p[q]) {
    throw DomainError(fmt::format("evidence {} already in cluster {}", q, j));
  }
  ClimbState state(p, evidence, c0);
  return state.make_eval(q, j, state.conflict_without(q),
                         state.conflict_with(q, j));
}

bool is_favorable(double c_i, double c_i_star, double c_j, double c_j_star) {
  for (double c : {c_i, c_i_star, c_j, c_j_star}) {
    if (!(c >= 0.0 && c < 1.0)) {
      throw DomainError(fmt::format("conflict {} not in [0,1)", c));
    }
  }
  const auto survive = [](double c) {
    return 1.0 - std::min(c, kConflictCeiling);
  };
  return survive(c_j_star) / survive(c_j) > survive(c_i) / survive(c_i_star);
}

std::optional<TransferEval> best_transfer(
    const Partition& p, std::span<const SimpleSupport> evidence,
    DomainConflict c0) {
  check_inputs(p, evidence);
  return ClimbState(p, evidence, c0).best();
}

ClimbResult optimize(const Partition& initial,
                     std::span<const SimpleSupport> evidence,
                     DomainConflict c0, const ClimbOptions& options) {
  check_inputs(initial, evidence);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  ClimbState state(initial, evidence, c0);
  ClimbResult result{initial, state.mcf(), 0, 0, {state.mcf()}, false};
  bool local_minimum = false;
  while (result.sweeps < options.max_sweeps) {
    if (options.time_budget && Clock::now() - start > *options.time_budget) {
      break;
    }
    ++result.sweeps;
    auto move = state.best();
    if (!move) {
      local_minimum = true;
      break;
    }
    state.apply(*move);
    ++result.accepted_transfers;
    result.trajectory.push_back(state.mcf());
  }
  result.truncated = !local_minimum;
  result.final_partition = state.partition();
  result.final_mcf = state.mcf();
  return result;
}

}  // namespace dsclust::hillclimb
