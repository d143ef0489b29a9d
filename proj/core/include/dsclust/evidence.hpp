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

#ifndef DSCLUST_EVIDENCE_HPP_
#define DSCLUST_EVIDENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dsclust {

using Mask = std::uint32_t;

inline constexpr int kMaxFrameSize = 30;

// Frame of discernment {1, ..., size}.
class Frame {
 public:
  explicit Frame(int size);

  int size() const { return size_; }
  Mask full_mask() const { return (Mask{1} << size_) - 1; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  int size_;
};

// Subset of a frame, possibly empty. Element k (1-based) is bit k-1.
class Subset {
 public:
  Subset(Frame frame, Mask mask);

  static Subset empty(Frame frame) { return Subset(frame, 0); }
  static Subset full(Frame frame) { return Subset(frame, frame.full_mask()); }
  static Subset of(Frame frame, std::initializer_list<int> elements);
  static Subset of(Frame frame, std::span<const int> elements);

  Frame frame() const { return frame_; }
  Mask mask() const { return mask_; }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int element) const;
  int cardinality() const;
  // Ascending 1-based element indices.
  std::vector<int> elements() const;
  // Smallest element, or 0 for the empty set.
  int min_element() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  Frame frame_;
  Mask mask_;
};

// Throws FrameMismatch when the frames differ.
Subset intersect(const Subset& a, const Subset& b);

// Mass `mass` on a nonempty focal set, 1 - mass on the whole frame.
class SimpleSupport {
 public:
  SimpleSupport(Subset focal, double mass);

  const Subset& focal() const { return focal_; }
  double mass() const { return mass_; }
  Frame frame() const { return focal_.frame(); }

  friend bool operator==(const SimpleSupport&, const SimpleSupport&) = default;

 private:
  Subset focal_;
  double mass_;
};

// m_j * m_k when the focal sets are disjoint, else 0.
double pairwise_conflict(const SimpleSupport& a, const SimpleSupport& b);

// Upper bound applied to a conflict before taking its weight.
inline constexpr double kConflictCeiling = 1.0 - 1e-12;

// -ln(1 - c). Values in [kConflictCeiling, 1) are clamped to the ceiling;
// c < 0, c >= 1 and NaN throw DomainError.
double conflict_weight(double c);

// Mass function over 2^frame with the empty set holding accumulated conflict.
//
// Entries are kept sorted by mask with extended-precision masses. Masses
// below kPruneThreshold (other than those on the empty set and the frame) are
// folded back into the frame.
class MassFunction {
 public:
  static constexpr long double kPruneThreshold = 1e-15L;

  struct Entry {
    Mask mask;
    long double mass;
  };

  static MassFunction vacuous(Frame frame);
  // Validating constructor: masses nonnegative, summing to 1 within 1e-9.
  static MassFunction from_entries(
      Frame frame, std::span<const std::pair<Subset, double>> entries);

  Frame frame() const { return frame_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }

  double mass_of(const Subset& s) const;
  double conflict() const { return static_cast<double>(conflict_mass()); }
  long double conflict_mass() const;
  double total() const;

  friend MassFunction combine_conjunctive(const MassFunction& acc,
                                          const SimpleSupport& e);

 private:
  explicit MassFunction(Frame frame) : frame_(frame) {}

  Frame frame_;
  std::vector<Entry> entries_;
};

// Unnormalized conjunctive combination; the empty-set entry keeps the
// conflict. Throws FrameMismatch.
MassFunction combine_conjunctive(const MassFunction& acc,
                                 const SimpleSupport& e);

// Resolution to which cluster conflicts are rounded. Folds of the same
// evidence that differ only in rounding history report identical values.
inline constexpr double kConflictResolution = 0x1.0p-44;

double quantize_conflict(long double c);

// Conflict of folding the whole sequence, starting from the vacuous mass
// function. Empty and singleton sequences give 0.
double cluster_conflict(std::span<const SimpleSupport> evidence);

// Conflict of the members (by index, folded in the given order).
double cluster_conflict(std::span<const SimpleSupport> evidence,
                        std::span<const std::size_t> members);

// Throws FrameMismatch unless every piece of evidence shares one frame.
void require_common_frame(std::span<const SimpleSupport> evidence);

}  // namespace dsclust

#endif  // DSCLUST_EVIDENCE_HPP_
