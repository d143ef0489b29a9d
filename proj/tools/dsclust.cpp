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

// dsclust: cluster Dempster-Shafer evidence by minimizing metaconflict.
//
//   dsclust generate --n 4 --seed 7 --out p.json
//   dsclust cluster p.json --method neural --runs 10 --seed 1
//   dsclust bench --n 3,4,5 --runs 10
//   dsclust analyze --n 6
//   dsclust oracle p.json
//   dsclust render p.json --snapshots 10

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "dsclust/error.hpp"
#include "dsclust/experiment.hpp"
#include "dsclust/problem_io.hpp"
#include "dsclust/problems.hpp"
#include "dsclust/render.hpp"
#include "dsclust/rng.hpp"

namespace {

using namespace dsclust;

struct ParamOverrides {
  std::optional<double> eta, ri, gi, dti, u0, noise, threshold;
  std::optional<int> max_iters;

  void attach(CLI::App* app) {
    app->add_option("--eta", eta, "Gain factor");
    app->add_option("--ri", ri, "Row inhibition");
    app->add_option("--gi", gi, "Global inhibition");
    app->add_option("--dti", dti, "Data-term inhibition");
    app->add_option("--u0", u0, "Sigmoid temperature");
    app->add_option("--noise", noise, "Initial noise as a fraction of u0");
    app->add_option("--threshold", threshold, "Row finalization threshold");
    app->add_option("--max-iters", max_iters, "Network iteration cap");
  }

  hopfield::HyperParams apply(std::size_t evidence_count) const {
    auto p = hopfield::HyperParams::defaults_for(evidence_count);
    if (eta) p.eta = *eta;
    if (ri) p.ri = *ri;
    if (gi) p.gi = *gi;
    if (dti) p.dti = *dti;
    if (u0) p.u0 = *u0;
    if (noise) p.noise_amplitude = *noise;
    if (threshold) p.finalize_threshold = *threshold;
    if (max_iters) p.max_iterations = *max_iters;
    p.validate();
    return p;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer evidence clustering by metaconflict minimization"};
  app.require_subcommand(1);

  int n = 3;
  std::uint64_t seed = 1;
  std::size_t runs = 10;
  std::string method = "neural";
  double c0 = 0.0;
  int snapshots = 0;
  std::string out;
  std::string format = "csv";
  std::string render_format = "text";
  std::string problem_path;
  std::vector<int> sizes{3, 4, 5};
  double budget_ms = 60000.0;
  std::optional<std::size_t> clusters;
  std::string matrix_path;
  ParamOverrides overrides;

  auto* generate = app.add_subcommand("generate", "Write a full 2^n - 1 problem");
  generate->add_option("--n", n, "Frame size")->required();
  generate->add_option("--seed", seed, "Mass generator seed");
  generate->add_option("--out", out, "Output path (stdout if omitted)");

  auto* cluster = app.add_subcommand("cluster", "Run seeded clustering runs");
  cluster->add_option("problem", problem_path, "Problem file")->required();
  cluster->add_option("--method", method, "neural | iterative")
      ->check(CLI::IsMember({"neural", "iterative"}));
  cluster->add_option("--runs", runs, "Number of runs");
  cluster->add_option("--seed", seed, "Master seed");
  cluster->add_option("--c0", c0, "Domain conflict");
  cluster->add_option("--snapshots", snapshots,
                      "Print V grids every k iterations (neural)");
  cluster->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cluster->add_option("--out", out, "Output path (stdout if omitted)");
  overrides.attach(cluster);

  auto* bench = app.add_subcommand("bench", "Both methods over full problems");
  bench->add_option("--n", sizes, "Frame sizes")->delimiter(',');
  bench->add_option("--runs", runs, "Runs per method");
  bench->add_option("--seed", seed, "Master seed");
  bench->add_option("--c0", c0, "Domain conflict");
  bench->add_option("--budget-ms", budget_ms,
                    "Iterative time budget per run for n >= 7");
  bench->add_option("--format", format, "csv | json | table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  bench->add_option("--out", out, "Output path (stdout if omitted)");
  overrides.attach(bench);

  auto* analyze = app.add_subcommand("analyze", "Pair-conflict analytics");
  analyze->add_option("--n", n, "Frame size")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact minimum by enumeration");
  oracle->add_option("problem", problem_path, "Problem file")->required();
  oracle->add_option("--clusters", clusters, "Cluster count (default n_clusters)");
  oracle->add_option("--c0", c0, "Domain conflict");

  auto* render = app.add_subcommand("render", "Text grids of output voltages");
  render->add_option("problem", problem_path, "Problem file");
  render->add_option("--matrix", matrix_path, "Render a V matrix CSV instead");
  render->add_option("--seed", seed, "Master seed");
  render->add_option("--snapshots", snapshots, "Grid every k iterations");
  render->add_option("--format", render_format, "text | csv")
      ->check(CLI::IsMember({"text", "csv"}));
  render->add_option("--out", out, "Output path (stdout if omitted)");
  overrides.attach(render);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      const auto problem = generate_full_problem(n, seed);
      emit(problem_to_json(problem), out);
      return 0;
    }

    if (cluster->parsed()) {
      const auto problem = load_problem(problem_path);
      harness::RunConfig config;
      config.method = harness::parse_method(method);
      config.runs = runs;
      config.master_seed = seed;
      config.c0 = DomainConflict(c0);
      if (config.method == harness::Method::kNeural) {
        config.neural_params = overrides.apply(problem.evidence.size());
        config.snapshot_every = snapshots;
        if (snapshots > 0) {
          config.on_snapshot = [](std::size_t run, const hopfield::Snapshot& s) {
            std::cerr << fmt::format("run {} iteration {}\n", run, s.iteration)
                      << render_grid(s.v) << '\n';
          };
        }
      }
      const auto records = harness::run_many(problem, config);
      for (const auto& r : records) {
        if (!harness::verify_record(r, problem, config.c0)) {
          throw Error(fmt::format("run seed {} failed re-evaluation", r.seed));
        }
      }
      const auto summary = harness::summarize(records, problem.n_clusters,
                                              problem.evidence.size());
      if (format == "json") {
        emit(harness::runs_to_json(records, summary), out);
      } else {
        emit(harness::runs_to_csv(records), out);
        std::cerr << harness::format_summary(summary);
      }
      return 0;
    }

    if (bench->parsed()) {
      harness::BenchConfig config;
      config.sizes = sizes;
      config.runs = runs;
      config.seed = seed;
      config.c0 = DomainConflict(c0);
      config.iterative_budget_ms = budget_ms;
      config.neural_params = [&](std::size_t count) {
        return overrides.apply(count);
      };
      const auto rows = harness::bench(config);
      if (format == "table") {
        emit(harness::format_bench_table(rows), out);
      } else if (format == "json") {
        std::string text = "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          std::vector<harness::RunRecord> neural, iterative;
          for (const auto& r : rows[i].records) {
            (r.method == harness::Method::kNeural ? neural : iterative).push_back(r);
          }
          text += fmt::format("{{\"n\": {}, \"neural\": {}, \"iterative\": {}}}{}\n",
                              rows[i].n,
                              harness::runs_to_json(neural, rows[i].neural),
                              harness::runs_to_json(iterative, rows[i].iterative),
                              i + 1 < rows.size() ? "," : "");
        }
        emit(text + "]\n", out);
      } else {
        std::string text;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          text += harness::runs_to_csv(rows[i].records, i == 0);
        }
        emit(text, out);
        std::cerr << harness::format_bench_table(rows);
      }
      return 0;
    }

    if (analyze->parsed()) {
      std::cout << harness::format_analytics(harness::analyze(n));
      return 0;
    }

    if (oracle->parsed()) {
      const auto problem = load_problem(problem_path);
      const auto r = clusters.value_or(static_cast<std::size_t>(problem.n_clusters));
      const auto result = brute_force_min(problem.evidence, r, DomainConflict(c0));
      std::cout << fmt::format("min_mcf,{:.17g}\nassignment,{}\n",
                               result.min_metaconflict,
                               fmt::join(result.argmin.assignment(), ";"));
      return 0;
    }

    if (render->parsed()) {
      if (!matrix_path.empty()) {
        const auto v = matrix_from_csv(read_file(matrix_path));
        emit(render_format == "csv" ? matrix_to_csv(v) : render_grid(v), out);
        return 0;
      }
      if (problem_path.empty()) {
        throw FormatError("render needs a problem file or --matrix");
      }
      const auto problem = load_problem(problem_path);
      hopfield::ClusterOptions options;
      options.snapshot_every = snapshots > 0 ? snapshots : 10;
      options.keep_snapshots = true;
      const auto run = hopfield::cluster(
          problem.evidence, problem.n_clusters,
          overrides.apply(problem.evidence.size()),
          derive_run_seed(seed, 0), options);
      std::string text;
      for (const auto& s : run.snapshots) {
        text += render_format == "csv"
                    ? fmt::format("# iteration {}\n{}", s.iteration, matrix_to_csv(s.v))
                    : fmt::format("iteration {}\n{}\n", s.iteration, render_grid(s.v));
      }
      text += fmt::format("# converged={} iterations={} mcf={:.17g}\n",
                          run.converged, run.iterations, run.metaconflict);
      emit(text, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "dsclust: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
