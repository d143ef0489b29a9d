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

#include "dsclust/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dsclust/error.hpp"
#include "dsclust/hillclimb.hpp"
#include "dsclust/rng.hpp"
#include "json.hpp"

namespace dsclust::harness {

std::string_view method_name(Method m) {
  return m == Method::kNeural ? "neural" : "iterative";
}

Method parse_method(std::string_view name) {
  if (name == "neural") return Method::kNeural;
  if (name == "iterative") return Method::kIterative;
  throw FormatError(fmt::format("unknown method '{}'", name));
}

RunRecord run_once(const BenchmarkProblem& problem, const RunConfig& config,
                   std::size_t run_index) {
  using Clock = std::chrono::steady_clock;
  const std::uint64_t seed = derive_run_seed(config.master_seed, run_index);
  RunRecord rec;
  rec.method = config.method;
  rec.seed = seed;

  const auto start = Clock::now();
  if (config.method == Method::kNeural) {
    const auto params = config.neural_params.value_or(
        hopfield::HyperParams::defaults_for(problem.evidence.size()));
    hopfield::ClusterOptions options;
    options.c0 = config.c0;
    options.snapshot_every = config.snapshot_every;
    if (config.on_snapshot) {
      options.on_snapshot = [&](const hopfield::Snapshot& s) {
        config.on_snapshot(run_index, s);
      };
    }
    auto run = hopfield::cluster(problem.evidence, problem.n_clusters, params,
                                 seed, options);
    rec.metaconflict = run.metaconflict;
    rec.iterations = static_cast<std::size_t>(run.iterations);
    rec.sweeps_or_transfers = rec.iterations;
    rec.partition = std::move(run.partition);
    rec.per_cluster_conflicts = std::move(run.cluster_conflicts);
    rec.completed = run.converged;
  } else {
    const auto initial =
        random_partition(problem.evidence.size(),
                         static_cast<std::size_t>(problem.n_clusters), seed);
    hillclimb::ClimbOptions options;
    options.max_sweeps = config.max_sweeps;
    if (config.iterative_budget_ms) {
      options.time_budget = std::chrono::nanoseconds(
          static_cast<std::int64_t>(*config.iterative_budget_ms * 1e6));
    }
    auto result =
        hillclimb::optimize(initial, problem.evidence, config.c0, options);
    rec.metaconflict = result.final_mcf;
    rec.iterations = result.accepted_transfers;
    rec.sweeps_or_transfers = result.sweeps;
    rec.per_cluster_conflicts =
        cluster_conflicts(result.final_partition, problem.evidence);
    rec.partition = std::move(result.final_partition);
    rec.completed = !result.truncated;
  }
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rec;
}

std::vector<RunRecord> run_many(const BenchmarkProblem& problem,
                                const RunConfig& config) {
  std::vector<RunRecord> out;
  out.reserve(config.runs);
  for (std::size_t i = 0; i < config.runs; ++i) {
    out.push_back(run_once(problem, config, i));
  }
  return out;
}

bool verify_record(const RunRecord& record, const BenchmarkProblem& problem,
                   DomainConflict c0, double tolerance) {
  if (record.partition.size() != problem.evidence.size()) return false;
  const double mcf = metaconflict(record.partition, problem.evidence, c0);
  return std::fabs(mcf - record.metaconflict) <= tolerance;
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size();
  return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

double safe_per_cluster(double mcf, int n) {
  return mcf < 1.0 ? per_cluster_conflict(mcf, n)
                   : std::numeric_limits<double>::quiet_NaN();
}

double safe_per_evidence(double mcf, int n, std::size_t evidence) {
  return mcf < 1.0 ? per_evidence_conflict(mcf, n, evidence)
                   : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

MethodSummary summarize(std::span<const RunRecord> records, int n_clusters,
                        std::size_t evidence_count) {
  if (records.empty()) throw DomainError("summary of zero runs");
  MethodSummary s;
  s.method = records.front().method;
  s.runs = records.size();
  std::vector<double> mcf;
  double iters = 0, sweeps = 0, wall = 0;
  for (const auto& r : records) {
    mcf.push_back(r.metaconflict);
    iters += static_cast<double>(r.iterations);
    sweeps += static_cast<double>(r.sweeps_or_transfers);
    wall += r.wall_ms;
    if (r.completed) ++s.completed_runs;
    if (r.method == Method::kIterative && !r.completed) s.estimated = true;
  }
  const double k = static_cast<double>(records.size());
  s.best = *std::min_element(mcf.begin(), mcf.end());
  s.mean = std::accumulate(mcf.begin(), mcf.end(), 0.0) / k;
  s.median = median_of(mcf);
  s.mean_iterations = iters / k;
  s.mean_sweeps = sweeps / k;
  s.mean_wall_ms = wall / k;
  s.best_per_cluster = safe_per_cluster(s.best, n_clusters);
  s.median_per_cluster = safe_per_cluster(s.median, n_clusters);
  s.best_per_evidence = safe_per_evidence(s.best, n_clusters, evidence_count);
  s.median_per_evidence =
      safe_per_evidence(s.median, n_clusters, evidence_count);
  return s;
}

std::vector<BenchRow> bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (int n : config.sizes) {
    const auto problem = generate_full_problem(
        n, derive_run_seed(config.seed, static_cast<std::uint64_t>(n)));
    BenchRow row;
    row.n = n;
    row.evidence = problem.evidence.size();

    RunConfig neural;
    neural.method = Method::kNeural;
    neural.runs = config.runs;
    neural.master_seed = config.seed;
    neural.c0 = config.c0;
    if (config.neural_params) neural.neural_params = config.neural_params(row.evidence);
    auto neural_records = run_many(problem, neural);

    RunConfig iterative = neural;
    iterative.method = Method::kIterative;
    iterative.neural_params.reset();
    if (n >= 7) iterative.iterative_budget_ms = config.iterative_budget_ms;
    auto iterative_records = run_many(problem, iterative);

    row.neural = summarize(neural_records, n, row.evidence);
    row.iterative = summarize(iterative_records, n, row.evidence);
    row.records = std::move(neural_records);
    row.records.insert(row.records.end(), iterative_records.begin(),
                       iterative_records.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fixed_or_nan(double x, int digits) {
  return std::isnan(x) ? std::string("-") : fmt::format("{:.{}f}", x, digits);
}

}  // namespace

std::string format_bench_table(std::span<const BenchRow> rows) {
  std::string out;
  auto line = [&](std::string_view label, auto&& cell) {
    out += fmt::format("{:<22}", label);
    for (const auto& r : rows) out += fmt::format("{:>12}", cell(r));
    out += '\n';
  };
  line("# Evidence", [](const BenchRow& r) { return fmt::format("{}", r.evidence); });
  line("# Clusters", [](const BenchRow& r) { return fmt::format("{}", r.n); });
  for (const bool neural : {true, false}) {
    out += neural ? "Neural structure\n" : "Iterative optimization\n";
    auto pick = [neural](const BenchRow& r) -> const MethodSummary& {
      return neural ? r.neural : r.iterative;
    };
    line("  time (ms)", [&](const BenchRow& r) {
      const auto& s = pick(r);
      return fmt::format("{:.3f}{}", s.mean_wall_ms, s.estimated ? "*" : "");
    });
    line(neural ? "  iterations" : "  transfers", [&](const BenchRow& r) {
      return fmt::format("{:.1f}", pick(r).mean_iterations);
    });
    if (!neural) {
      line("  sweeps", [&](const BenchRow& r) {
        return fmt::format("{:.1f}", pick(r).mean_sweeps);
      });
    }
    line("  best", [&](const BenchRow& r) { return fixed_or_nan(pick(r).best, 4); });
    line("  median", [&](const BenchRow& r) { return fixed_or_nan(pick(r).median, 4); });
    line("  mean", [&](const BenchRow& r) { return fixed_or_nan(pick(r).mean, 4); });
    line("  best / cluster", [&](const BenchRow& r) {
      return fixed_or_nan(pick(r).best_per_cluster, 4);
    });
    line("  best / evidence", [&](const BenchRow& r) {
      return fixed_or_nan(pick(r).best_per_evidence, 5);
    });
    line("  median / cluster", [&](const BenchRow& r) {
      return fixed_or_nan(pick(r).median_per_cluster, 4);
    });
    line("  median / evidence", [&](const BenchRow& r) {
      return fixed_or_nan(pick(r).median_per_evidence, 5);
    });
    line("  completed", [&](const BenchRow& r) {
      return fmt::format("{}/{}", pick(r).completed_runs, pick(r).runs);
    });
  }
  if (std::any_of(rows.begin(), rows.end(),
                  [](const BenchRow& r) { return r.iterative.estimated; })) {
    out += "* time budget exhausted; lower bound\n";
  }
  return out;
}

std::string runs_to_csv(std::span<const RunRecord> records, bool header) {
  std::string out;
  if (header) {
    out += "method,run_seed,mcf,iterations,sweeps_or_transfers,wall_ms,"
           "assignment\n";
  }
  for (const auto& r : records) {
    out += fmt::format("{},{},{:.17g},{},{},{:.3f},{}\n", method_name(r.method),
                       r.seed, r.metaconflict, r.iterations,
                       r.sweeps_or_transfers, r.wall_ms,
                       fmt::join(r.partition.assignment(), ";"));
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos
                                      ? std::string_view::npos
                                      : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError(fmt::format("bad numeric field '{}'", field));
  }
  return value;
}

}  // namespace

std::vector<RunRecord> runs_from_csv(std::string_view text,
                                     std::optional<std::size_t> clusters) {
  std::vector<RunRecord> out;
  bool first = true;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (first && line.starts_with("method,")) {
      first = false;
      continue;
    }
    first = false;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw FormatError(fmt::format("CSV row with {} fields: '{}'", f.size(), line));
    }
    RunRecord r;
    r.method = parse_method(f[0]);
    r.seed = parse_number<std::uint64_t>(f[1]);
    r.metaconflict = parse_number<double>(f[2]);
    r.iterations = parse_number<std::size_t>(f[3]);
    r.sweeps_or_transfers = parse_number<std::size_t>(f[4]);
    r.wall_ms = parse_number<double>(f[5]);
    std::vector<std::size_t> assignment;
    if (!f[6].empty()) {
      for (auto cell : split(f[6], ';')) {
        assignment.push_back(parse_number<std::size_t>(cell));
      }
    }
    std::size_t r_clusters = 1;
    for (auto a : assignment) r_clusters = std::max(r_clusters, a + 1);
    r.partition = Partition(std::move(assignment), clusters.value_or(r_clusters));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

nlohmann::json nan_as_null(double x) {
  return std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x);
}

}  // namespace

std::string runs_to_json(std::span<const RunRecord> records,
                         const MethodSummary& summary) {
  nlohmann::json doc;
  doc["runs"] = nlohmann::json::array();
  for (const auto& r : records) {
    doc["runs"].push_back({
        {"method", method_name(r.method)},
        {"run_seed", r.seed},
        {"mcf", r.metaconflict},
        {"iterations", r.iterations},
        {"sweeps_or_transfers", r.sweeps_or_transfers},
        {"wall_ms", r.wall_ms},
        {"completed", r.completed},
        {"assignment", std::vector<std::size_t>(r.partition.assignment().begin(),
                                                r.partition.assignment().end())},
        {"per_cluster_conflicts", r.per_cluster_conflicts},
    });
  }
  doc["summary"] = {
      {"method", method_name(summary.method)},
      {"runs", summary.runs},
      {"completed_runs", summary.completed_runs},
      {"best", summary.best},
      {"median", summary.median},
      {"mean", summary.mean},
      {"mean_iterations", summary.mean_iterations},
      {"mean_sweeps", summary.mean_sweeps},
      {"mean_wall_ms", summary.mean_wall_ms},
      {"best_per_cluster", nan_as_null(summary.best_per_cluster)},
      {"best_per_evidence", nan_as_null(summary.best_per_evidence)},
      {"median_per_cluster", nan_as_null(summary.median_per_cluster)},
      {"median_per_evidence", nan_as_null(summary.median_per_evidence)},
      {"estimated", summary.estimated},
  };
  return doc.dump(2) + "\n";
}

std::string format_summary(const MethodSummary& s) {
  return fmt::format(
      "{} runs={} completed={} best={:.6g} median={:.6g} mean={:.6g} "
      "mean_iterations={:.1f} mean_sweeps={:.1f} mean_wall_ms={:.3f}{} "
      "median/cluster={} median/evidence={}\n",
      method_name(s.method), s.runs, s.completed_runs, s.best, s.median,
      s.mean, s.mean_iterations, s.mean_sweeps, s.mean_wall_ms,
      s.estimated ? "*" : "", fixed_or_nan(s.median_per_cluster, 4),
      fixed_or_nan(s.median_per_evidence, 5));
}

Analytics analyze(int n, double mean_mass_product) {
  Analytics a;
  a.n = n;
  a.total_pairs = total_pair_count(n);
  a.conflicting_pairs = conflicting_pair_count(n);
  a.conflict_probability = conflict_probability(n);
  a.conflict_probability_with_replacement =
      conflict_probability_with_replacement(n);
  a.mean_mass_product = mean_mass_product;
  a.expected_pair_conflict = expected_random_pair_conflict(n, mean_mass_product);
  return a;
}

std::string format_analytics(const Analytics& a) {
  return fmt::format(
      "frame size                          {}\n"
      "evidence (2^n - 1)                  {}\n"
      "unordered pairs                     {}\n"
      "conflicting pairs                   {}\n"
      "conflict probability                {:.6f}\n"
      "  over ordered draws w/ replacement {:.6f}\n"
      "expected pair conflict (E[mm]={:g})  {:.6f}\n",
      a.n, (std::uint64_t{1} << a.n) - 1, a.total_pairs, a.conflicting_pairs,
      a.conflict_probability, a.conflict_probability_with_replacement,
      a.mean_mass_product, a.expected_pair_conflict);
}

}  // namespace dsclust::harness
