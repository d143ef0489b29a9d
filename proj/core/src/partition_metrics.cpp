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

#include "dsclust/partition_metrics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dsclust/error.hpp"

namespace dsclust {

WeightMatrix::WeightMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DomainError(fmt::format("weight matrix is {}x{}, not square",
                                  m_.rows(), m_.cols()));
  }
  for (std::size_t j = 0; j < m_.rows(); ++j) {
    if (m_(j, j) != 0.0) {
      throw DomainError(fmt::format("nonzero diagonal weight at {}", j));
    }
    for (std::size_t k = 0; k < m_.cols(); ++k) {
      const double w = m_(j, k);
      if (!std::isfinite(w) || w < 0.0) {
        throw DomainError(fmt::format("weight ({}, {}) = {}", j, k, w));
      }
      if (w != m_(k, j)) {
        throw DomainError(fmt::format("weights ({0}, {1}) and ({1}, {0}) differ",
                                      j, k));
      }
    }
  }
}

Partition::Partition(std::vector<std::size_t> assignment, std::size_t clusters)
    : assignment_(std::move(assignment)), clusters_(clusters) {
  if (clusters_ == 0) throw DomainError("partition with zero clusters");
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= clusters_) {
      throw DomainError(fmt::format("evidence {} assigned to cluster {} of {}",
                                    i, assignment_[i], clusters_));
    }
  }
}

std::vector<std::size_t> Partition::members(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == c) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(clusters_, 0);
  for (std::size_t c : assignment_) ++sizes[c];
  return sizes;
}

Partition Partition::with_transfer(std::size_t q, std::size_t j) const {
  if (q >= assignment_.size()) {
    throw DomainError(fmt::format("evidence index {} out of range", q));
  }
  if (j >= clusters_) {
    throw DomainError(fmt::format("cluster index {} out of range", j));
  }
  Partition out = *this;
  out.assignment_[q] = j;
  return out;
}

DomainConflict::DomainConflict(double c0) : c0_(c0) {
  if (!(c0 >= 0.0 && c0 < 1.0)) {
    throw DomainError(fmt::format("domain conflict {} not in [0,1)", c0));
  }
}

std::vector<double> cluster_conflicts(const Partition& p,
                                      std::span<const SimpleSupport> evidence) {
  if (p.size() != evidence.size()) {
    throw LengthMismatch(fmt::format("partition of {} for {} evidence",
                                     p.size(), evidence.size()));
  }
  require_common_frame(evidence);
  std::vector<std::vector<std::size_t>> members(p.clusters());
  for (std::size_t i = 0; i < p.size(); ++i) members[p[i]].push_back(i);
  std::vector<double> out;
  out.reserve(p.clusters());
  for (const auto& m : members) out.push_back(cluster_conflict(evidence, m));
  return out;
}

double metaconflict_from_conflicts(std::span<const double> conflicts,
                                   DomainConflict c0) {
  double survive = 1.0 - c0.value();
  for (double c : conflicts) survive *= 1.0 - c;
  return 1.0 - survive;
}

double metaconflict(const Partition& p, std::span<const SimpleSupport> evidence,
                    DomainConflict c0) {
  return metaconflict_from_conflicts(cluster_conflicts(p, evidence), c0);
}

double log_objective(const Partition& p,
                     std::span<const SimpleSupport> evidence,
                     DomainConflict c0) {
  double sum = conflict_weight(c0.value());
  for (double c : cluster_conflicts(p, evidence)) sum += conflict_weight(c);
  return sum;
}

double pairwise_surrogate(const Partition& p, const WeightMatrix& weights) {
  if (weights.size() != p.size()) {
    throw LengthMismatch(fmt::format("{}x{} weights for a partition of {}",
                                     weights.size(), weights.size(), p.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = k + 1; l < p.size(); ++l) {
      if (p[k] == p[l]) sum += weights(k, l);
    }
  }
  return sum;
}

double per_cluster_conflict(double mcf, int n) {
  if (!(mcf >= 0.0 && mcf < 1.0)) {
    throw DomainError(fmt::format("metaconflict {} not in [0,1)", mcf));
  }
  if (n < 1) throw DomainError(fmt::format("cluster count {}", n));
  return -std::expm1(std::log1p(-mcf) / n);
}

double per_evidence_conflict(double mcf, int n, std::size_t evidence_count) {
  if (evidence_count < static_cast<std::size_t>(std::max(n, 1))) {
    throw DomainError(fmt::format("{} evidence for {} clusters", evidence_count,
                                  n));
  }
  return per_cluster_conflict(mcf, n) * n /
         static_cast<double>(evidence_count);
}

namespace {

void check_pair_frame(int n) {
  if (n < 1) throw DomainError(fmt::format("frame size {}", n));
  if (n > kMaxFrameSize) {
    throw GuardError(fmt::format("frame size {} overflows pair counts", n));
  }
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace

std::uint64_t total_pair_count(int n) {
  check_pair_frame(n);
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  return (subsets * subsets - subsets) / 2;
}

std::uint64_t conflicting_pair_count(int n) {
  check_pair_frame(n);
  // j elements in the first set, k of the remaining n - j in the second;
  // every unordered pair is counted twice.
  std::uint64_t twice = 0;
  for (int j = 1; j <= n - 1; ++j) {
    std::uint64_t inner = 0;
    for (int k = 1; k <= n - j; ++k) inner += binomial(n - j, k);
    twice += binomial(n, j) * inner;
  }
  return twice / 2;
}

double conflict_probability(int n) {
  if (n < 2) throw DomainError(fmt::format("frame size {} < 2", n));
  return static_cast<double>(conflicting_pair_count(n)) /
         static_cast<double>(total_pair_count(n));
}

double conflict_probability_with_replacement(int n) {
  if (n < 2) throw DomainError(fmt::format("frame size {} < 2", n));
  const double subsets = std::ldexp(1.0, n) - 1.0;
  return 2.0 * static_cast<double>(conflicting_pair_count(n)) /
         (subsets * subsets);
}

double expected_random_pair_conflict(int n, double mean_mass_product) {
  if (!(mean_mass_product >= 0.0 && mean_mass_product <= 1.0)) {
    throw DomainError(
        fmt::format("mean mass product {} not in [0,1]", mean_mass_product));
  }
  return conflict_probability(n) * mean_mass_product;
}

}  // namespace dsclust
