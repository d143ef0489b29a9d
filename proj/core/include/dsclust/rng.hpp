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

#ifndef DSCLUST_RNG_HPP_
#define DSCLUST_RNG_HPP_

#include <cstdint>
#include <random>

namespace dsclust {

// Seeded generator with a portable output sequence.
//
// The engine is std::mt19937_64, whose output is fixed by the C++ standard.
// The standard distributions are not portable across library vendors, so the
// conversions to reals and bounded integers are done here:
//   uniform01_open()  = ((x >> 11) + 0.5) * 2^-53, never 0 or 1;
//   uniform01()       = (x >> 11) * 2^-53, in [0, 1);
//   below(r)          = rejection sampling on the top bits of x.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform01_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Smallest all-ones mask covering bound - 1.
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of run `run_index` under a master seed: mix64(master ^ mix64(index)).
constexpr std::uint64_t derive_run_seed(std::uint64_t master,
                                        std::uint64_t run_index) {
  return mix64(master ^ mix64(run_index));
}

}  // namespace dsclust

#endif  // DSCLUST_RNG_HPP_
