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

#include "dsclust/hopfield.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "dsclust/error.hpp"
#include "dsclust/rng.hpp"

namespace dsclust::hopfield {

void HyperParams::validate() const {
  if (!(eta > 0.0)) throw DomainError(fmt::format("eta = {} <= 0", eta));
  if (!(ri < 0.0 && gi < 0.0 && dti < 0.0)) {
    throw DomainError(
        fmt::format("inhibitions must be negative (ri={}, gi={}, dti={})", ri,
                    gi, dti));
  }
  if (!(u0 > 0.0)) throw DomainError(fmt::format("u0 = {} <= 0", u0));
  if (!(noise_amplitude >= 0.0)) {
    throw DomainError(fmt::format("noise amplitude {} < 0", noise_amplitude));
  }
  if (!(finalize_threshold > 0.0 && finalize_threshold < 1.0)) {
    throw DomainError(
        fmt::format("finalize threshold {} not in (0,1)", finalize_threshold));
  }
  if (max_iterations <= 0) {
    throw DomainError(fmt::format("max_iterations = {}", max_iterations));
  }
}

HyperParams HyperParams::defaults_for(std::size_t evidence_count) {
  HyperParams p;
  if (evidence_count > kBaseEvidenceCount) {
    const double scale = static_cast<double>(evidence_count) /
                         static_cast<double>(kBaseEvidenceCount);
    p.gi /= scale;
    p.dti *= scale;
  }
  return p;
}

WeightMatrix build_weights(std::span<const SimpleSupport> evidence) {
  require_common_frame(evidence);
  const std::size_t n = evidence.size();
  Matrix w(n, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double weight =
          conflict_weight(pairwise_conflict(evidence[j], evidence[k]));
      w(j, k) = weight;
      w(k, j) = weight;
    }
  }
  return WeightMatrix(std::move(w));
}

double excitation_bias(int n, std::size_t evidence_count, double gi,
                       double ri) {
  if (n < 1) throw DomainError(fmt::format("cluster count {}", n));
  if (evidence_count < 1) throw DomainError("no evidence");
  return -(gi * static_cast<double>(evidence_count) + (ri + gi) * (n - 1)) / n;
}

double initial_input_voltage(int n, double u0) {
  if (n < 2) throw DomainError(fmt::format("cluster count {} < 2", n));
  return u0 * std::atanh(2.0 / n - 1.0);
}

NetworkState init_state(std::size_t evidence_count, int n,
                        const HyperParams& params, std::uint64_t seed) {
  if (evidence_count < 2 || n < 2) {
    throw DomainError(fmt::format("network of {} rows and {} columns",
                                  evidence_count, n));
  }
  const auto cols = static_cast<std::size_t>(n);
  const double u00 = initial_input_voltage(n, params.u0);
  const double amp = params.noise_amplitude * params.u0;
  Rng rng(seed);
  NetworkState s{Matrix(evidence_count, cols), Matrix(evidence_count, cols),
                 std::vector<std::uint8_t>(evidence_count, 0), 0};
  for (std::size_t m = 0; m < evidence_count; ++m) {
    for (std::size_t c = 0; c < cols; ++c) {
      s.u(m, c) = u00 + rng.uniform(-amp, amp);
      s.v(m, c) = output_voltage(s.u(m, c), params.u0);
    }
  }
  return s;
}

std::vector<double> row_decrease_guard(std::span<const double> prev,
                                       std::span<const double> next) {
  if (prev.size() != next.size()) {
    throw LengthMismatch("rows of different length");
  }
  std::vector<double> out(next.begin(), next.end());
  double least = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < prev.size(); ++c) {
    const double drop = prev[c] - next[c];
    if (!(drop > 0.0)) return out;
    least = std::min(least, drop);
  }
  for (double& x : out) x = std::clamp(x + least, 0.0, 1.0);
  return out;
}

std::optional<std::vector<double>> row_finalize_check(
    std::span<const double> row, double threshold) {
  if (row.size() < 2) throw DomainError("row shorter than two columns");
  std::size_t best = 0;
  for (std::size_t c = 1; c < row.size(); ++c) {
    if (row[c] > row[best]) best = c;
  }
  double second = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c != best) second = std::max(second, row[c]);
  }
  if (row[best] >= threshold || second == 0.0) {
    std::vector<double> hot(row.size(), 0.0);
    hot[best] = 1.0;
    return hot;
  }
  return std::nullopt;
}

NetworkState update_iteration(const NetworkState& state,
                              const WeightMatrix& weights,
                              const HyperParams& params, double eb) {
  const std::size_t rows = state.rows();
  const std::size_t cols = state.cols();
  if (weights.size() != rows) {
    throw LengthMismatch(fmt::format("{}x{} weights for {} rows",
                                     weights.size(), weights.size(), rows));
  }
  if (converged(state)) return state;

  NetworkState next = state;
  ++next.iteration;

  std::vector<double> column_sum(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) column_sum[c] += state.v(i, c);
  }

  const double row_coupling = params.ri + params.gi;
  std::vector<double> conflict_sum(cols);
  for (std::size_t m = 0; m < rows; ++m) {
    if (state.finalized[m]) continue;

    // sum_i w(m, i) * V(i, c); w(m, m) = 0.
    std::fill(conflict_sum.begin(), conflict_sum.end(), 0.0);
    const auto w = weights.row(m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (w[i] == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        conflict_sum[c] += w[i] * state.v(i, c);
      }
    }

    for (std::size_t c = 0; c < cols; ++c) {
      const double column_term =
          params.dti * conflict_sum[c] + params.gi * column_sum[c];
      double others = 0.0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != c) others += state.v(m, j);
      }
      const double row_term = row_coupling * others;
      const double u = state.u(m, c);
      next.u(m, c) = u + params.eta * (column_term + row_term + eb - u);
      next.v(m, c) = output_voltage(next.u(m, c), params.u0);
    }

    // The row guard acts on input voltages: when every output fell, every
    // input is raised by the smallest input drop. The least-decreased neuron
    // is restored exactly and the output ordering is preserved, while u and
    // V stay consistent for the next iteration.
    bool all_fell = true;
    double least_drop = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(next.v(m, c) < state.v(m, c))) {
        all_fell = false;
        break;
      }
      least_drop = std::min(least_drop, state.u(m, c) - next.u(m, c));
    }
    if (all_fell) {
      for (std::size_t c = 0; c < cols; ++c) {
        next.u(m, c) += least_drop;
        next.v(m, c) = output_voltage(next.u(m, c), params.u0);
      }
    }

    if (auto hot = row_finalize_check(next.v.row(m), params.finalize_threshold)) {
      std::copy(hot->begin(), hot->end(), next.v.row(m).begin());
      next.finalized[m] = 1;
    }
  }
  return next;
}

bool converged(const NetworkState& state) {
  return std::all_of(state.finalized.begin(), state.finalized.end(),
                     [](std::uint8_t f) { return f != 0; });
}

Partition extract_partition(const NetworkState& state) {
  if (!converged(state)) {
    throw NotConverged(fmt::format("network not converged after {} iterations",
                                   state.iteration));
  }
  std::vector<std::size_t> assignment(state.rows());
  for (std::size_t m = 0; m < state.rows(); ++m) {
    const auto row = state.v.row(m);
    assignment[m] = static_cast<std::size_t>(
        std::find(row.begin(), row.end(), 1.0) - row.begin());
  }
  return Partition(std::move(assignment), state.cols());
}

Partition argmax_partition(const NetworkState& state) {
  std::vector<std::size_t> assignment(state.rows());
  for (std::size_t m = 0; m < state.rows(); ++m) {
    const auto row = state.v.row(m);
    assignment[m] = static_cast<std::size_t>(
        std::max_element(row.begin(), row.end()) - row.begin());
  }
  return Partition(std::move(assignment), state.cols());
}

NeuralRun cluster(std::span<const SimpleSupport> evidence, int n,
                  const HyperParams& params, std::uint64_t seed,
                  const ClusterOptions& options) {
  params.validate();
  const WeightMatrix weights = build_weights(evidence);
  const double eb = excitation_bias(n, evidence.size(), params.gi, params.ri);
  NetworkState state = init_state(evidence.size(), n, params, seed);

  NeuralRun run{Partition({}, static_cast<std::size_t>(n)), {}, 0.0, 0, false,
                {}};
  int last_snapshot = -1;
  auto snapshot = [&] {
    if (options.snapshot_every <= 0 || last_snapshot == state.iteration) return;
    Snapshot snap{state.iteration, state.v};
    if (options.on_snapshot) options.on_snapshot(snap);
    if (options.keep_snapshots) run.snapshots.push_back(std::move(snap));
    last_snapshot = state.iteration;
  };

  snapshot();
  while (!converged(state) && state.iteration < params.max_iterations) {
    state = update_iteration(state, weights, params, eb);
    if (options.snapshot_every > 0 &&
        state.iteration % options.snapshot_every == 0) {
      snapshot();
    }
  }
  snapshot();

  run.converged = converged(state);
  run.iterations = state.iteration;
  run.partition =
      run.converged ? extract_partition(state) : argmax_partition(state);
  run.cluster_conflicts = cluster_conflicts(run.partition, evidence);
  run.metaconflict =
      metaconflict_from_conflicts(run.cluster_conflicts, options.c0);
  return run;
}

}  // namespace dsclust::hopfield
