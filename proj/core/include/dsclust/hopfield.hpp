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

#ifndef DSCLUST_HOPFIELD_HPP_
#define DSCLUST_HOPFIELD_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/matrix.hpp"
#include "dsclust/partition_metrics.hpp"

// Analog neural network with one row per piece of evidence and one column
// per cluster. Weights come straight from pairwise conflicts; nothing is
// learned.
namespace dsclust::hopfield {

struct HyperParams {
  double eta = 1e-5;    // gain factor
  double ri = -500.0;   // row inhibition
  double gi = -200.0;   // global inhibition
  double dti = -2000.0; // data-term inhibition
  double u0 = 0.02;     // sigmoid temperature
  double noise_amplitude = 0.1;  // initial noise, as a fraction of u0
  double finalize_threshold = 0.99;
  int max_iterations = 5000;

  // Throws DomainError unless eta > 0, ri, gi, dti < 0, u0 > 0,
  // noise_amplitude >= 0, 0 < finalize_threshold < 1, max_iterations > 0.
  void validate() const;

  // Defaults tuned for the 7-evidence problem. For larger N, gi shrinks by
  // 7 / N so gi * N stays fixed, while dti grows by N / 7 so the data term
  // keeps pace with the larger number of conflicting rows in each column.
  static HyperParams defaults_for(std::size_t evidence_count);

  static constexpr std::size_t kBaseEvidenceCount = 7;
};

struct NetworkState {
  Matrix u;  // input voltages
  Matrix v;  // output voltages in [0, 1]
  std::vector<std::uint8_t> finalized;
  int iteration = 0;

  std::size_t rows() const { return u.rows(); }
  std::size_t cols() const { return u.cols(); }
};

// w(j, k) = conflict_weight(pairwise_conflict(e_j, e_k)).
WeightMatrix build_weights(std::span<const SimpleSupport> evidence);

// -[gi * N + (ri + gi) * (n - 1)] / n. With N = 2^n - 1 this balances the
// uniform state exactly.
double excitation_bias(int n, std::size_t evidence_count, double gi,
                       double ri);

// u0 * atanh(2/n - 1): the input voltage whose output voltage is 1/n.
double initial_input_voltage(int n, double u0);

// 0.5 * (1 + tanh(u / u0)).
inline double output_voltage(double u, double u0);

NetworkState init_state(std::size_t evidence_count, int n,
                        const HyperParams& params, std::uint64_t seed);

// One synchronous update of every non-finalized neuron, followed by the
// row decrease guard and the finalization check.
NetworkState update_iteration(const NetworkState& state,
                              const WeightMatrix& weights,
                              const HyperParams& params, double eb);

// When every entry strictly decreased, lifts the row by the smallest
// decrease (clamped to [0, 1]); otherwise returns `next` unchanged.
// update_iteration applies the same rule to input voltages.
std::vector<double> row_decrease_guard(std::span<const double> prev,
                                       std::span<const double> next);

// One-hot row at the first maximal entry when the maximum reaches
// `threshold` or the second-highest entry is exactly 0.
std::optional<std::vector<double>> row_finalize_check(
    std::span<const double> row, double threshold);

bool converged(const NetworkState& state);

// Column holding V = 1 in each row. Throws NotConverged.
Partition extract_partition(const NetworkState& state);

// Column of the largest V in each row (lowest column on ties).
Partition argmax_partition(const NetworkState& state);

struct Snapshot {
  int iteration = 0;
  Matrix v;
};

struct ClusterOptions {
  DomainConflict c0;
  // Record V at iteration 0, every `snapshot_every` iterations and at the
  // end; 0 disables.
  int snapshot_every = 0;
  std::function<void(const Snapshot&)> on_snapshot;
  bool keep_snapshots = false;
};

struct NeuralRun {
  Partition partition;
  std::vector<double> cluster_conflicts;
  double metaconflict = 0.0;
  int iterations = 0;
  // False when max_iterations ran out; the partition is then the argmax of
  // the analog state.
  bool converged = false;
  std::vector<Snapshot> snapshots;
};

NeuralRun cluster(std::span<const SimpleSupport> evidence, int n,
                  const HyperParams& params, std::uint64_t seed,
                  const ClusterOptions& options = {});

inline double output_voltage(double u, double u0) {
  return 0.5 * (1.0 + std::tanh(u / u0));
}

}  // namespace dsclust::hopfield

#endif  // DSCLUST_HOPFIELD_HPP_
