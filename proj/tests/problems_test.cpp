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

#include <vector>

#include <gtest/gtest.h>

#include "dsclust/error.hpp"
#include "oracles.hpp"

namespace dsclust {
namespace {

TEST(GenerateFullProblemTest, Structure) {
  const auto p = generate_full_problem(3, 1);
  ASSERT_EQ(p.evidence.size(), 7u);
  EXPECT_EQ(p.n_clusters, 3);
  EXPECT_EQ(p.frame.size(), 3);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(p.evidence[i].focal().mask(), i + 1);
    EXPECT_GT(p.evidence[i].mass(), 0.0);
    EXPECT_LT(p.evidence[i].mass(), 1.0);
  }
  EXPECT_TRUE(is_full_family(p));
}

TEST(GenerateFullProblemTest, SeededAndGuarded) {
  EXPECT_EQ(generate_full_problem(5, 9), generate_full_problem(5, 9));
  EXPECT_NE(generate_full_problem(5, 9), generate_full_problem(5, 10));
  EXPECT_THROW(generate_full_problem(1, 0), GuardError);
  EXPECT_THROW(generate_full_problem(kMaxFullProblemSize + 1, 0), GuardError);
}

TEST(GenerateFullProblemTest, MeanMassNearOneHalf) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 7; ++seed) {
    for (const auto& e : generate_full_problem(7, seed).evidence) {
      sum += e.mass();
      ++count;
    }
  }
  EXPECT_NEAR(sum / count, 0.5, 0.05);
}

TEST(IsFullFamilyTest, DetectsGapsAndDuplicates) {
  auto p = generate_full_problem(3, 2);
  p.evidence.pop_back();
  EXPECT_FALSE(is_full_family(p));
  p.evidence.push_back(p.evidence.front());
  EXPECT_FALSE(is_full_family(p));
}

TEST(CanonicalZeroPartitionTest, TwoElements) {
  const auto p = generate_full_problem(2, 1);
  const Partition z = canonical_zero_partition(p);
  EXPECT_EQ(z, Partition({0, 1, 0}, 2));
  EXPECT_EQ(metaconflict(z, p.evidence), 0.0);
}

TEST(CanonicalZeroPartitionTest, ThreeElements) {
  const auto p = generate_full_problem(3, 1);
  const Partition z = canonical_zero_partition(p);
  EXPECT_EQ(z.cluster_sizes(), (std::vector<std::size_t>{4, 2, 1}));
  EXPECT_EQ(z.members(1), (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(metaconflict(z, p.evidence), 0.0);
}

TEST(CanonicalZeroPartitionTest, EveryClusterConflictFree) {
  for (int n = 2; n <= 8; ++n) {
    const auto p = generate_full_problem(n, n);
    const Partition z = canonical_zero_partition(p);
    for (double c : cluster_conflicts(z, p.evidence)) EXPECT_EQ(c, 0.0);
  }
}

TEST(RandomPartitionTest, Basics) {
  const Partition one = random_partition(10, 1, 3);
  for (auto c : one.assignment()) EXPECT_EQ(c, 0u);
  EXPECT_EQ(random_partition(20, 4, 8), random_partition(20, 4, 8));
  EXPECT_THROW(random_partition(3, 0, 1), DomainError);
}

TEST(RandomPartitionTest, OccupancyIsBalanced) {
  std::vector<std::size_t> total(4, 0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto sizes = random_partition(100, 4, seed).cluster_sizes();
    for (std::size_t c = 0; c < 4; ++c) total[c] += sizes[c];
  }
  for (auto t : total) EXPECT_NEAR(t / 200.0, 25.0, 1.0);
}

TEST(BruteForceMinTest, Examples) {
  const auto two = generate_full_problem(2, 4);
  const OracleResult r2 = brute_force_min(two.evidence, 2);
  EXPECT_EQ(r2.min_metaconflict, 0.0);
  EXPECT_EQ(metaconflict(r2.argmin, two.evidence), 0.0);

  const Frame f(2);
  const std::vector<SimpleSupport> forced{
      SimpleSupport(Subset::of(f, {1}), 0.5),
      SimpleSupport(Subset::of(f, {2}), 0.5)};
  EXPECT_DOUBLE_EQ(brute_force_min(forced, 1).min_metaconflict, 0.25);

  const auto three = generate_full_problem(3, 4);
  EXPECT_EQ(brute_force_min(three.evidence, 3).min_metaconflict, 0.0);
  EXPECT_EQ(brute_force_min(three.evidence, 3, {}, false).min_metaconflict,
            0.0);
}

TEST(BruteForceMinTest, MatchesPlainOdometer) {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ev = testing::random_evidence(rng, 3 + rng.below(2),
                                             2 + rng.below(6));
    const std::size_t r = 1 + rng.below(3);
    const double c0 = trial % 3 == 0 ? 0.2 : 0.0;
    const auto expected = oracle::exhaustive_minimum(ev, r, c0);
    for (bool symmetry : {true, false}) {
      const OracleResult got =
          brute_force_min(ev, r, DomainConflict(c0), symmetry);
      ASSERT_NEAR(got.min_metaconflict, expected.value, 1e-12);
      ASSERT_EQ(metaconflict(got.argmin, ev, DomainConflict(c0)),
                got.min_metaconflict);
    }
  }
}

TEST(BruteForceMinTest, Guards) {
  const auto p = generate_full_problem(5, 1);
  EXPECT_THROW(brute_force_min(p.evidence, 5), GuardError);
  EXPECT_THROW(brute_force_min(p.evidence, 0), DomainError);
}

}  // namespace
}  // namespace dsclust
