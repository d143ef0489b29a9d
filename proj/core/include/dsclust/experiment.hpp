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

#ifndef DSCLUST_EXPERIMENT_HPP_
#define DSCLUST_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsclust/hopfield.hpp"
#include "dsclust/partition_metrics.hpp"
#include "dsclust/problems.hpp"

// Seeded multi-run experiments over benchmark problems and their reports.
namespace dsclust::harness {

enum class Method { kNeural, kIterative };

std::string_view method_name(Method m);
// "neural" or "iterative"; throws FormatError otherwise.
Method parse_method(std::string_view name);

struct RunRecord {
  Method method = Method::kNeural;
  std::uint64_t seed = 0;
  double metaconflict = 0.0;
  // Network iterations (neural) or accepted transfers (iterative).
  std::size_t iterations = 0;
  // Network iterations (neural) or full scans (iterative).
  std::size_t sweeps_or_transfers = 0;
  double wall_ms = 0.0;
  Partition partition{{}, 1};
  std::vector<double> per_cluster_conflicts;
  // Neural: every row settled. Iterative: reached a local minimum.
  bool completed = true;
};

struct RunConfig {
  Method method = Method::kNeural;
  std::size_t runs = 10;
  std::uint64_t master_seed = 1;
  DomainConflict c0;
  // Neural parameters; HyperParams::defaults_for(N) when empty.
  std::optional<hopfield::HyperParams> neural_params;
  std::size_t max_sweeps = 100000;
  // Per-run wall-clock budget for the iterative method.
  std::optional<double> iterative_budget_ms;
  // Neural snapshots, forwarded to hopfield::cluster.
  int snapshot_every = 0;
  std::function<void(std::size_t run_index, const hopfield::Snapshot&)>
      on_snapshot;
};

// Run `run_index` uses seed derive_run_seed(master_seed, run_index); for the
// iterative method it seeds the random initial partition, for the neural
// method the initial noise.
RunRecord run_once(const BenchmarkProblem& problem, const RunConfig& config,
                   std::size_t run_index);

// Runs 0 .. runs-1 in index order.
std::vector<RunRecord> run_many(const BenchmarkProblem& problem,
                                const RunConfig& config);

// True when the record's partition re-evaluates to its metaconflict within
// `tolerance`.
bool verify_record(const RunRecord& record, const BenchmarkProblem& problem,
                   DomainConflict c0 = {}, double tolerance = 1e-12);

struct MethodSummary {
  Method method = Method::kNeural;
  std::size_t runs = 0;
  std::size_t completed_runs = 0;
  double best = 0.0;
  double median = 0.0;  // mean of the middle two for an even count
  double mean = 0.0;
  double mean_iterations = 0.0;
  double mean_sweeps = 0.0;
  double mean_wall_ms = 0.0;
  // Per-cluster and per-evidence conflicts derived from best and median;
  // NaN when the metaconflict is 1.
  double best_per_cluster = 0.0;
  double best_per_evidence = 0.0;
  double median_per_cluster = 0.0;
  double median_per_evidence = 0.0;
  // Some run stopped on its time budget; times are lower bounds.
  bool estimated = false;
};

// Throws DomainError on an empty record set.
MethodSummary summarize(std::span<const RunRecord> records, int n_clusters,
                        std::size_t evidence_count);

struct BenchConfig {
  std::vector<int> sizes{3, 4, 5};
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  DomainConflict c0;
  // Applied to the iterative method for n >= 7.
  double iterative_budget_ms = 60000.0;
  std::function<hopfield::HyperParams(std::size_t evidence_count)>
      neural_params;
};

struct BenchRow {
  int n = 0;
  std::size_t evidence = 0;
  MethodSummary neural;
  MethodSummary iterative;
  std::vector<RunRecord> records;
};

// For each n: generate the full problem with seed derive_run_seed(seed, n),
// then run both methods with master seed `seed`.
std::vector<BenchRow> bench(const BenchConfig& config);

std::string format_bench_table(std::span<const BenchRow> rows);

// CSV columns: method,run_seed,mcf,iterations,sweeps_or_transfers,wall_ms,
// assignment (cluster indices joined by ';'). mcf uses 17 significant digits.
std::string runs_to_csv(std::span<const RunRecord> records,
                        bool header = true);
// Parses the CSV above. per_cluster_conflicts is left empty and the partition
// has max(assignment) + 1 clusters unless `clusters` is given.
std::vector<RunRecord> runs_from_csv(std::string_view text,
                                     std::optional<std::size_t> clusters = {});

std::string runs_to_json(std::span<const RunRecord> records,
                         const MethodSummary& summary);
std::string format_summary(const MethodSummary& summary);

struct Analytics {
  int n = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t conflicting_pairs = 0;
  double conflict_probability = 0.0;
  double conflict_probability_with_replacement = 0.0;
  double mean_mass_product = 0.25;
  double expected_pair_conflict = 0.0;
};

Analytics analyze(int n, double mean_mass_product = 0.25);
std::string format_analytics(const Analytics& a);

}  // namespace dsclust::harness

#endif  // DSCLUST_EXPERIMENT_HPP_
