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

#include "dsclust/evidence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "dsclust/error.hpp"

namespace dsclust {

Frame::Frame(int size) : size_(size) {
  if (size < 1 || size > kMaxFrameSize) {
    throw GuardError(fmt::format("frame size {} outside [1, {}]", size,
                                 kMaxFrameSize));
  }
}

Subset::Subset(Frame frame, Mask mask) : frame_(frame), mask_(mask) {
  if ((mask & ~frame.full_mask()) != 0) {
    throw DomainError(fmt::format("mask {:#x} exceeds frame of size {}", mask,
                                  frame.size()));
  }
}

Subset Subset::of(Frame frame, std::initializer_list<int> elements) {
  return of(frame, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(Frame frame, std::span<const int> elements) {
  Mask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > frame.size()) {
      throw DomainError(
          fmt::format("element {} not in frame 1..{}", e, frame.size()));
    }
    mask |= Mask{1} << (e - 1);
  }
  return Subset(frame, mask);
}

bool Subset::contains(int element) const {
  return element >= 1 && element <= frame_.size() &&
         (mask_ >> (element - 1) & 1u) != 0;
}

int Subset::cardinality() const { return std::popcount(mask_); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int Subset::min_element() const {
  return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
}

Subset intersect(const Subset& a, const Subset& b) {
  if (a.frame() != b.frame()) {
    throw FrameMismatch(fmt::format("frames of size {} and {}",
                                    a.frame().size(), b.frame().size()));
  }
  return Subset(a.frame(), a.mask() & b.mask());
}

SimpleSupport::SimpleSupport(Subset focal, double mass)
    : focal_(focal), mass_(mass) {
  if (focal.is_empty()) {
    throw DomainError("simple support on the empty set");
  }
  if (!(mass > 0.0 && mass < 1.0)) {
    throw DomainError(fmt::format("basic probability number {} not in (0,1)",
                                  mass));
  }
}

double pairwise_conflict(const SimpleSupport& a, const SimpleSupport& b) {
  return intersect(a.focal(), b.focal()).is_empty() ? a.mass() * b.mass()
                                                    : 0.0;
}

double conflict_weight(double c) {
  if (!(c >= 0.0 && c < 1.0)) {
    throw DomainError(fmt::format("conflict {} not in [0,1)", c));
  }
  return -std::log1p(-std::min(c, kConflictCeiling));
}

MassFunction MassFunction::vacuous(Frame frame) {
  MassFunction m(frame);
  m.entries_.push_back({frame.full_mask(), 1.0L});
  return m;
}

MassFunction MassFunction::from_entries(
    Frame frame, std::span<const std::pair<Subset, double>> entries) {
  MassFunction m(frame);
  long double total = 0;
  for (const auto& [subset, mass] : entries) {
    if (subset.frame() != frame) {
      throw FrameMismatch("mass function entry on a different frame");
    }
    if (!(mass >= 0.0)) {
      throw DomainError(fmt::format("negative mass {}", mass));
    }
    total += mass;
    if (mass > 0.0) m.entries_.push_back({subset.mask(), mass});
  }
  if (std::fabs(static_cast<double>(total) - 1.0) > 1e-9) {
    throw DomainError(fmt::format("masses sum to {}", static_cast<double>(total)));
  }
  std::sort(m.entries_.begin(), m.entries_.end(),
            [](const Entry& a, const Entry& b) { return a.mask < b.mask; });
  auto last = std::unique(m.entries_.begin(), m.entries_.end(),
                          [](const Entry& a, const Entry& b) {
                            return a.mask == b.mask;
                          });
  if (last != m.entries_.end()) {
    throw DomainError("duplicate subset in mass function entries");
  }
  return m;
}

double MassFunction::mass_of(const Subset& s) const {
  if (s.frame() != frame_) throw FrameMismatch("query on a different frame");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), s.mask(),
      [](const Entry& e, Mask m) { return e.mask < m; });
  return it != entries_.end() && it->mask == s.mask()
             ? static_cast<double>(it->mass)
             : 0.0;
}

long double MassFunction::conflict_mass() const {
  return !entries_.empty() && entries_.front().mask == 0
             ? entries_.front().mass
             : 0.0L;
}

double MassFunction::total() const {
  long double t = 0;
  for (const auto& e : entries_) t += e.mass;
  return static_cast<double>(t);
}

MassFunction combine_conjunctive(const MassFunction& acc,
                                 const SimpleSupport& e) {
  if (acc.frame() != e.frame()) {
    throw FrameMismatch(fmt::format("combining frames of size {} and {}",
                                    acc.frame().size(), e.frame().size()));
  }
  const Mask focal = e.focal().mask();
  const Mask full = acc.frame().full_mask();
  const long double m = e.mass();
  const long double rest = 1.0L - m;

  std::vector<MassFunction::Entry> raw;
  raw.reserve(acc.entries_.size() * 2);
  for (const auto& [mask, mass] : acc.entries_) {
    // A subset of the focal set meets it in itself (and so does the empty
    // set): the whole mass stays put.
    if ((mask & focal) == mask) {
      raw.push_back({mask, mass});
    } else {
      raw.push_back({mask & focal, mass * m});
      raw.push_back({mask, mass * rest});
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.mask < b.mask; });

  MassFunction out(acc.frame());
  out.entries_.reserve(raw.size());
  for (const auto& entry : raw) {
    if (!out.entries_.empty() && out.entries_.back().mask == entry.mask) {
      out.entries_.back().mass += entry.mass;
    } else {
      out.entries_.push_back(entry);
    }
  }

  long double pruned = 0;
  std::erase_if(out.entries_, [&](const MassFunction::Entry& x) {
    if (x.mask == 0 || x.mask == full) return false;
    if (x.mass >= MassFunction::kPruneThreshold) return false;
    pruned += x.mass;
    return true;
  });
  if (pruned > 0) {
    if (out.entries_.back().mask == full) {
      out.entries_.back().mass += pruned;
    } else {
      out.entries_.push_back({full, pruned});
    }
  }
  return out;
}

double quantize_conflict(long double c) {
  const long double scaled = std::nearbyint(c / kConflictResolution);
  const double q = static_cast<double>(scaled * kConflictResolution);
  return std::clamp(q, 0.0, 1.0);
}

void require_common_frame(std::span<const SimpleSupport> evidence) {
  for (const auto& e : evidence) {
    if (e.frame() != evidence.front().frame()) {
      throw FrameMismatch("evidence on frames of different size");
    }
  }
}

double cluster_conflict(std::span<const SimpleSupport> evidence) {
  if (evidence.size() < 2) {
    require_common_frame(evidence);
    return 0.0;
  }
  auto acc = MassFunction::vacuous(evidence.front().frame());
  for (const auto& e : evidence) acc = combine_conjunctive(acc, e);
  return quantize_conflict(acc.conflict_mass());
}

double cluster_conflict(std::span<const SimpleSupport> evidence,
                        std::span<const std::size_t> members) {
  if (members.empty()) return 0.0;
  auto acc = MassFunction::vacuous(evidence[members.front()].frame());
  for (std::size_t idx : members) {
    acc = combine_conjunctive(acc, evidence[idx]);
  }
  return quantize_conflict(acc.conflict_mass());
}

}  // namespace dsclust
