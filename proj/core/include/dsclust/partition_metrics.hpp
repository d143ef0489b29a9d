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

#ifndef DSCLUST_PARTITION_METRICS_HPP_
#define DSCLUST_PARTITION_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/matrix.hpp"

namespace dsclust {

// Assignment of N pieces of evidence to r clusters. Clusters may be empty.
class Partition {
 public:
  Partition(std::vector<std::size_t> assignment, std::size_t clusters);

  std::size_t size() const { return assignment_.size(); }
  std::size_t clusters() const { return clusters_; }
  std::size_t operator[](std::size_t i) const { return assignment_[i]; }
  std::span<const std::size_t> assignment() const { return assignment_; }

  // Ascending evidence indices assigned to cluster c.
  std::vector<std::size_t> members(std::size_t c) const;
  std::vector<std::size_t> cluster_sizes() const;

  // Copy with evidence q moved to cluster j.
  Partition with_transfer(std::size_t q, std::size_t j) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::size_t clusters_;
};

// Conflict between the number of clusters and prior belief about it.
class DomainConflict {
 public:
  constexpr DomainConflict() = default;
  explicit DomainConflict(double c0);

  double value() const { return c0_; }

 private:
  double c0_ = 0.0;
};

// cluster_conflict of every cluster, in cluster order.
std::vector<double> cluster_conflicts(const Partition& p,
                                      std::span<const SimpleSupport> evidence);

// 1 - (1 - c0) * prod_i (1 - c_i), multiplied in cluster order.
double metaconflict_from_conflicts(std::span<const double> conflicts,
                                   DomainConflict c0 = {});

// Throws LengthMismatch when |evidence| != |p|.
double metaconflict(const Partition& p, std::span<const SimpleSupport> evidence,
                    DomainConflict c0 = {});

// -ln(1 - c0) + sum_i -ln(1 - c_i).
double log_objective(const Partition& p,
                     std::span<const SimpleSupport> evidence,
                     DomainConflict c0 = {});

// Sum of w(k, l) over unordered co-clustered pairs. This is the quantity the
// neural network minimizes; it bounds log_objective (c0 = 0) from above.
double pairwise_surrogate(const Partition& p, const WeightMatrix& weights);

// Conflict of each of n equally conflicting clusters whose metaconflict is
// mcf (c0 = 0): 1 - (1 - mcf)^(1/n).
double per_cluster_conflict(double mcf, int n);

// per_cluster_conflict divided by the mean cluster size N / n.
double per_evidence_conflict(double mcf, int n, std::size_t evidence_count);

// Unordered pairs of distinct nonempty subsets of an n-element frame.
std::uint64_t total_pair_count(int n);

// Unordered pairs of disjoint nonempty subsets, by the binomial double sum.
std::uint64_t conflicting_pair_count(int n);

// conflicting_pair_count / total_pair_count.
double conflict_probability(int n);

// Same count of conflicting pairs, but taken over all (2^n - 1)^2 ordered
// draws with replacement: 2 * conflicting / (2^n - 1)^2.
double conflict_probability_with_replacement(int n);

double expected_random_pair_conflict(int n, double mean_mass_product);

}  // namespace dsclust

#endif  // DSCLUST_PARTITION_METRICS_HPP_
