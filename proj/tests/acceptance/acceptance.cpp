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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion,
// followed by indented detail lines, and exits nonzero if any criterion
// fails. All tolerances are fixed here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "dsclust/evidence.hpp"
#include "dsclust/experiment.hpp"
#include "dsclust/hillclimb.hpp"
#include "dsclust/hopfield.hpp"
#include "dsclust/partition_metrics.hpp"
#include "dsclust/problems.hpp"
#include "oracles.hpp"

namespace {

using namespace dsclust;

constexpr double kZero = 1e-9;
constexpr std::uint64_t kMasterSeed = 1;
constexpr std::size_t kRuns = 10;

struct Report {
  int failures = 0;

  void criterion(int id, std::string_view title, bool ok,
                 const std::vector<std::string>& details) {
    std::printf("[%s] AC%-2d %.*s\n", ok ? "PASS" : "FAIL", id,
                static_cast<int>(title.size()), title.data());
    for (const auto& d : details) std::printf("         %s\n", d.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

const harness::BenchRow& row_for(const std::vector<harness::BenchRow>& rows,
                                 int n) {
  return *std::find_if(rows.begin(), rows.end(),
                       [n](const auto& r) { return r.n == n; });
}

void global_minimum(Report& report, const std::vector<harness::BenchRow>& rows) {
  bool ok = true;
  std::vector<std::string> d;
  for (const auto& r : rows) {
    const bool neural_ok = r.neural.best <= kZero;
    const bool iter_ok = r.iterative.best <= kZero;
    const bool asserted_neural = r.n <= 5;
    ok = ok && iter_ok && (!asserted_neural || neural_ok);
    d.push_back(fmt::format(
        "n={} N={}: neural best {:.3g}{}  iterative best {:.3g}", r.n,
        r.evidence, r.neural.best, asserted_neural ? "" : " (reported only)",
        r.iterative.best));
  }
  report.criterion(1, "best-of-10 reaches metaconflict <= 1e-9 (n = 3..5 both "
                      "methods, n = 6 iterative)",
                   ok, d);
}

void iterative_median(Report& report,
                      const std::vector<harness::BenchRow>& rows) {
  bool ok = true;
  std::vector<std::string> d;
  for (int n : {3, 4, 5}) {
    const auto& s = row_for(rows, n).iterative;
    ok = ok && s.median <= kZero;
    d.push_back(fmt::format("n={}: iterative median {:.3g}", n, s.median));
  }
  report.criterion(2, "iterative median-of-10 <= 1e-9 for n = 3..5", ok, d);
}

void oracle_equivalence(Report& report) {
  bool ok = true;
  std::vector<std::string> d;
  for (int n : {2, 3}) {
    const auto p = generate_full_problem(n, derive_run_seed(kMasterSeed, n));
    const auto o = brute_force_min(p.evidence, static_cast<std::size_t>(n));
    const double canon = metaconflict(canonical_zero_partition(p), p.evidence);
    const bool match = o.min_metaconflict == 0.0 && canon == o.min_metaconflict;
    ok = ok && match;
    d.push_back(fmt::format("n={}: oracle min {} canonical {} ({} leaves)", n,
                            o.min_metaconflict, canon, o.leaves));
  }

  Rng rng(20260101);
  int matched = 0;
  int below = 0;
  constexpr int kInstances = 50;
  for (int i = 0; i < kInstances; ++i) {
    const int frame = 3 + static_cast<int>(rng.below(2));
    const std::size_t count = 4 + rng.below(5);
    const std::size_t r = 2 + rng.below(2);
    const auto ev = testing::random_evidence(rng, frame, count);
    const double exact = brute_force_min(ev, r).min_metaconflict;
    double best = 1.0;
    for (std::uint64_t run = 0; run < kRuns; ++run) {
      const Partition start =
          random_partition(count, r, derive_run_seed(rng.next(), run));
      best = std::min(best, hillclimb::optimize(start, ev).final_mcf);
    }
    if (best < exact - 1e-12) ++below;
    if (std::fabs(best - exact) <= 1e-12) ++matched;
  }
  const bool rate_ok = below == 0 && matched * 5 >= kInstances * 4;
  ok = ok && rate_ok;
  d.push_back(fmt::format(
      "random instances: hill climbing matched the oracle on {}/{} "
      "(need >= 80%), undercut it on {}",
      matched, kInstances, below));
  report.criterion(3, "oracle equivalence", ok, d);
}

void analytic_formulas(Report& report) {
  const double p6 = conflict_probability(6);
  const double e6 = expected_random_pair_conflict(6, 0.25);
  const bool p_ok = std::fabs(p6 - 0.152) <= 0.0005;
  const bool e_ok = std::fabs(e6 - 0.038) <= 0.0005;
  bool counts_ok = true;
  for (int n = 1; n <= 10; ++n) {
    counts_ok = counts_ok &&
                conflicting_pair_count(n) == oracle::enumerated_disjoint_pairs(n);
  }
  report.criterion(
      4, "analytic pair-conflict formulas", p_ok && e_ok && counts_ok,
      {fmt::format("conflict_probability(6) = {}/{} = {:.6f}, target 0.152 +- "
                   "0.0005: {}",
                   conflicting_pair_count(6), total_pair_count(6), p6,
                   p_ok ? "ok" : "MISS"),
       fmt::format("expected_random_pair_conflict(6, 0.25) = {:.6f}, target "
                   "0.038 +- 0.0005: {}",
                   e6, e_ok ? "ok" : "MISS"),
       fmt::format("conflicting_pair_count(n) equals enumeration for n <= 10: {}",
                   counts_ok ? "ok" : "MISS"),
       fmt::format("for reference, over ordered draws with replacement the "
                   "probability is {:.6f}",
                   conflict_probability_with_replacement(6))});
}

void table_arithmetic(Report& report) {
  struct Case {
    std::string label;
    double got;
    double want;
  };
  const std::vector<Case> cases{
      {"per_cluster_conflict(0.447, 6)", per_cluster_conflict(0.447, 6), 0.094},
      {"per_cluster_conflict(0.904, 7)", per_cluster_conflict(0.904, 7), 0.284},
      {"per_evidence_conflict(0.447, 6, 63)",
       per_evidence_conflict(0.447, 6, 63), 0.009},
      {"per_evidence_conflict(0.581, 7, 127)",
       per_evidence_conflict(0.581, 7, 127), 0.006}};
  bool ok = true;
  std::vector<std::string> d;
  for (const auto& c : cases) {
    const bool hit = std::fabs(c.got - c.want) <= 0.001;
    ok = ok && hit;
    d.push_back(fmt::format("{} = {:.5f} (target {} +- 0.001)", c.label, c.got,
                            c.want));
  }
  report.criterion(5, "per-cluster and per-evidence conflict arithmetic", ok,
                   d);
}

void transfer_equivalence(Report& report) {
  Rng rng(6006);
  constexpr int kCases = 2000;
  int agree = 0;
  int favorable = 0;
  int errors = 0;
  for (int i = 0; i < kCases; ++i) {
    try {
      const auto ev = testing::random_evidence(rng, 3 + rng.below(4),
                                               2 + rng.below(14));
      const std::size_t r = 2 + rng.below(4);
      const Partition p = testing::random_assignment(rng, ev.size(), r);
      const std::size_t q = rng.below(ev.size());
      std::size_t j = rng.below(r - 1);
      if (j >= p[q]) ++j;
      const auto t = hillclimb::evaluate_transfer(p, ev, q, j);
      const bool fav = hillclimb::is_favorable(t.c_source, t.c_source_star,
                                               t.c_target, t.c_target_star);
      const bool lower =
          metaconflict(p.with_transfer(q, j), ev) < metaconflict(p, ev);
      if (fav == lower) ++agree;
      if (fav) ++favorable;
    } catch (const std::exception&) {
      ++errors;
    }
  }
  report.criterion(
      6, "transfer inequality matches recomputed metaconflict",
      agree == kCases && errors == 0,
      {fmt::format("{}/{} cases agree ({} favorable), {} exceptions", agree,
                   kCases, favorable, errors)});
}

bool same_record(const harness::RunRecord& a, const harness::RunRecord& b) {
  return a.method == b.method && a.seed == b.seed &&
         a.metaconflict == b.metaconflict && a.iterations == b.iterations &&
         a.sweeps_or_transfers == b.sweeps_or_transfers &&
         a.partition == b.partition &&
         a.per_cluster_conflicts == b.per_cluster_conflicts &&
         a.completed == b.completed;
}

void network_mechanics(Report& report) {
  std::vector<std::string> d;
  const double u0 = 0.02;
  double worst_sigmoid = 0.0;
  for (int n = 2; n <= 10; ++n) {
    worst_sigmoid = std::max(
        worst_sigmoid,
        std::fabs(hopfield::output_voltage(
                      hopfield::initial_input_voltage(n, u0), u0) -
                  1.0 / n));
  }
  const bool sigmoid_ok = worst_sigmoid <= 1e-12;
  d.push_back(fmt::format("|V(u00) - 1/n| over n = 2..10: {:.2e}",
                          worst_sigmoid));

  // Zero-conflict evidence: every focal contains element 1.
  double worst_decay = 0.0;
  {
    Rng rng(77);
    const Frame f(5);
    std::vector<SimpleSupport> ev;
    for (int i = 0; i < 31; ++i) {
      ev.emplace_back(Subset(f, static_cast<Mask>(rng.below(32)) | 1u),
                      rng.uniform01_open());
    }
    hopfield::HyperParams p;
    p.noise_amplitude = 0.0;
    const auto w = hopfield::build_weights(ev);
    for (int n = 2; n <= 8; ++n) {
      const double eb = hopfield::excitation_bias(n, ev.size(), p.gi, p.ri);
      const auto s = hopfield::init_state(ev.size(), n, p, 0);
      const auto next = hopfield::update_iteration(s, w, p, eb);
      for (std::size_t i = 0; i < s.u.data().size(); ++i) {
        worst_decay = std::max(
            worst_decay,
            std::fabs(next.u.data()[i] - (1.0 - p.eta) * s.u.data()[i]));
      }
    }
  }
  const bool decay_ok = worst_decay <= 1e-12;
  d.push_back(fmt::format("|u1 - (1 - eta) u0| on uniform zero-conflict "
                          "states: {:.2e}",
                          worst_decay));

  bool weights_ok = true;
  {
    Rng rng(88);
    for (int trial = 0; trial < 100 && weights_ok; ++trial) {
      const auto ev =
          testing::random_evidence(rng, 2 + rng.below(6), 2 + rng.below(30));
      const auto w = hopfield::build_weights(ev);
      for (std::size_t j = 0; j < ev.size(); ++j) {
        if (w(j, j) != 0.0) weights_ok = false;
        for (std::size_t k = 0; k < j; ++k) {
          if (w(j, k) != w(k, j)) weights_ok = false;
        }
      }
    }
  }
  d.push_back(fmt::format("weight matrices symmetric, zero diagonal on 100 "
                          "random instances: {}",
                          weights_ok ? "ok" : "MISS"));

  bool deterministic = true;
  for (auto method : {harness::Method::kNeural, harness::Method::kIterative}) {
    const auto p = generate_full_problem(4, 321);
    harness::RunConfig cfg;
    cfg.method = method;
    cfg.runs = 5;
    cfg.master_seed = 4242;
    const auto a = harness::run_many(p, cfg);
    const auto b = harness::run_many(p, cfg);
    for (std::size_t i = 0; i < a.size(); ++i) {
      deterministic = deterministic && same_record(a[i], b[i]);
    }
  }
  d.push_back(fmt::format("repeated seeded runs give identical records "
                          "(wall time excluded): {}",
                          deterministic ? "ok" : "MISS"));
  report.criterion(7, "network mechanics",
                   sigmoid_ok && decay_ok && weights_ok && deterministic, d);
}

void convergence(Report& report, const std::vector<harness::BenchRow>& rows) {
  bool ok = true;
  std::vector<std::string> d;
  for (int n : {3, 4, 5}) {
    const auto& s = row_for(rows, n).neural;
    const bool hit = s.completed_runs * 10 >= s.runs * 9 &&
                     s.mean_iterations >= 10.0 && s.mean_iterations <= 1000.0;
    ok = ok && hit;
    d.push_back(fmt::format("n={}: {}/{} converged, mean iterations {:.1f}", n,
                            s.completed_runs, s.runs, s.mean_iterations));
  }
  report.criterion(8, "neural convergence (>= 9/10 runs, mean iterations in "
                      "[10, 1000])",
                   ok, d);
}

void scaling(Report& report, const std::vector<harness::BenchRow>& rows) {
  const auto& r5 = row_for(rows, 5);
  const auto& r6 = row_for(rows, 6);
  const double iter_ratio = r6.iterative.mean_wall_ms / r5.iterative.mean_wall_ms;
  const double neural_ratio = r6.neural.mean_wall_ms / r5.neural.mean_wall_ms;
  report.criterion(
      9, "iterative time grows faster than neural time from n = 5 to 6",
      iter_ratio > neural_ratio,
      {fmt::format("iterative {:.3f} -> {:.3f} ms (x{:.2f}), neural {:.3f} -> "
                   "{:.3f} ms (x{:.2f})",
                   r5.iterative.mean_wall_ms, r6.iterative.mean_wall_ms,
                   iter_ratio, r5.neural.mean_wall_ms, r6.neural.mean_wall_ms,
                   neural_ratio)});
}

void properties(Report& report) {
  std::vector<std::string> d;

  double spread = 0.0;
  {
    Rng rng(1001);
    std::mt19937_64 shuffler(1002);
    auto ev = testing::random_evidence(rng, 6, 24);
    double lo = cluster_conflict(ev), hi = lo;
    for (int s = 0; s < 1000; ++s) {
      std::shuffle(ev.begin(), ev.end(), shuffler);
      const double c = cluster_conflict(ev);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    spread = hi - lo;
  }
  const bool perm_ok = spread <= 1e-12;
  d.push_back(fmt::format("cluster_conflict spread over 1000 shuffles: {:.2e}",
                          spread));

  double worst_mass = 0.0;
  {
    Rng rng(1003);
    for (int trial = 0; trial < 500; ++trial) {
      const int frame = 1 + static_cast<int>(rng.below(10));
      const auto ev = testing::random_evidence(rng, frame, 1 + rng.below(20));
      auto m = MassFunction::vacuous(Frame(frame));
      for (const auto& e : ev) {
        m = combine_conjunctive(m, e);
        worst_mass = std::max(worst_mass, std::fabs(m.total() - 1.0));
      }
    }
  }
  const bool mass_ok = worst_mass <= 1e-9;
  d.push_back(fmt::format("worst |total mass - 1| after a combination: {:.2e}",
                          worst_mass));

  bool monotone = true;
  std::size_t transfers = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto p = generate_full_problem(n, derive_run_seed(kMasterSeed, n));
    for (std::uint64_t run = 0; run < kRuns; ++run) {
      const auto start = random_partition(p.evidence.size(), n,
                                          derive_run_seed(kMasterSeed, run));
      const auto r = hillclimb::optimize(start, p.evidence);
      transfers += r.accepted_transfers;
      for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
        monotone = monotone && r.trajectory[i] < r.trajectory[i - 1];
      }
    }
  }
  d.push_back(fmt::format("hill-climb trajectories strictly decrease over {} "
                          "accepted transfers: {}",
                          transfers, monotone ? "ok" : "MISS"));

  bool frozen_ok = true;
  std::size_t checks = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto p = generate_full_problem(n, derive_run_seed(kMasterSeed, n));
    const auto params = hopfield::HyperParams::defaults_for(p.evidence.size());
    const auto w = hopfield::build_weights(p.evidence);
    const double eb =
        hopfield::excitation_bias(n, p.evidence.size(), params.gi, params.ri);
    for (std::uint64_t run = 0; run < 3; ++run) {
      auto s = hopfield::init_state(p.evidence.size(), n, params,
                                    derive_run_seed(kMasterSeed, run));
      while (!hopfield::converged(s) && s.iteration < params.max_iterations) {
        auto next = hopfield::update_iteration(s, w, params, eb);
        for (std::size_t m = 0; m < s.rows(); ++m) {
          if (!s.finalized[m]) continue;
          ++checks;
          const auto a = s.v.row(m);
          const auto b = next.v.row(m);
          if (!next.finalized[m] || !std::equal(a.begin(), a.end(), b.begin()) ||
              !std::equal(s.u.row(m).begin(), s.u.row(m).end(),
                          next.u.row(m).begin())) {
            frozen_ok = false;
          }
        }
        s = std::move(next);
      }
    }
  }
  d.push_back(fmt::format("finalized rows unchanged across {} row-iterations: {}",
                          checks, frozen_ok ? "ok" : "MISS"));
  report.criterion(10, "property suites",
                   perm_ok && mass_ok && monotone && frozen_ok, d);
}

}  // namespace

int main() {
  Report report;

  harness::BenchConfig cfg;
  cfg.sizes = {3, 4, 5, 6};
  cfg.runs = kRuns;
  cfg.seed = kMasterSeed;
  const auto rows = harness::bench(cfg);
  std::fputs(harness::format_bench_table(rows).c_str(), stdout);
  std::puts("");

  global_minimum(report, rows);
  iterative_median(report, rows);
  oracle_equivalence(report);
  analytic_formulas(report);
  table_arithmetic(report);
  transfer_equivalence(report);
  network_mechanics(report);
  convergence(report, rows);
  scaling(report, rows);
  properties(report);

  std::printf("\n%d of 10 criteria failed\n", report.failures);
  return report.failures == 0 ? 0 : 1;
}
