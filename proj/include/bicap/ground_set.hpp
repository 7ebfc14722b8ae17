// Copyright 2026 The Bicap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Index spaces of the library: the criteria set N = {1, ..., n}, its subsets
// (bitmasks, bit i-1 <-> criterion i) and the disjoint pairs Q(N).
//
// Pairs are tabulated in base 3: digit i is 0 when criterion i+1 is in
// neither set, 1 when it is in the positive set and 2 when it is in the
// negative set. The index of (A, B) is therefore ternary(A) + 2 * ternary(B).

#ifndef BICAP_GROUND_SET_HPP
#define BICAP_GROUND_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bicap {

inline constexpr int kMaxSubsetCriteria = 16;
inline constexpr int kMaxPairCriteria = 12;

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  /// Builds a mask from 1-based criterion numbers.
  static SubsetMask of(std::initializer_list<int> criteria);
  static SubsetMask of(const std::vector<int>& criteria);
  /// Mask holding the single 0-based criterion index `i`.
  static constexpr SubsetMask singleton(int i) { return SubsetMask(1u << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// 0-based membership test.
  constexpr bool contains(int i) const { return ((bits_ >> i) & 1u) != 0; }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint_from(SubsetMask other) const {
    return (bits_ & other.bits_) == 0;
  }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Sorted 1-based criterion numbers.
  std::vector<int> criteria() const;
  /// Compact notation: "{}" for the empty set, otherwise e.g. "{1,3}".
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// An element (A, B) of Q(N): pos = A, neg = B.
struct BiSetPair {
  SubsetMask pos;
  SubsetMask neg;

  constexpr bool is_disjoint() const { return pos.disjoint_from(neg); }
  constexpr auto operator<=>(const BiSetPair&) const = default;
  std::string to_string() const;
};

/// (A, B) ⊑ (C, D) iff A ⊆ C and B ⊇ D.
constexpr bool precedes(const BiSetPair& lhs, const BiSetPair& rhs) {
  return lhs.pos.is_subset_of(rhs.pos) && rhs.neg.is_subset_of(lhs.neg);
}

/// sum over i in mask of 3^i; valid for masks of up to 16 bits.
std::uint32_t ternary_code(std::uint32_t mask);

/// Integer power 3^n.
constexpr std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

class GroundSet {
 public:
  /// Throws CapacityLimitError unless 1 <= n <= 16.
  explicit GroundSet(int n);

  int size() const { return n_; }
  SubsetMask full() const { return SubsetMask((1u << n_) - 1u); }
  SubsetMask complement(SubsetMask a) const { return full() - a; }
  bool contains(SubsetMask a) const { return a.is_subset_of(full()); }

  std::size_t subset_count() const { return std::size_t{1} << n_; }
  std::size_t pair_count() const { return pow3(n_); }

  /// Throws CapacityLimitError when n exceeds the bi-capacity cap of 12.
  void require_pair_tabulation() const;

  std::size_t pair_index(const BiSetPair& p) const {
    return ternary_code(p.pos.bits()) + 2 * std::size_t{ternary_code(p.neg.bits())};
  }
  BiSetPair pair_at(std::size_t index) const;

  /// All of Q(N) in index order.
  std::vector<BiSetPair> pairs() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

/// Throws GroundSetMismatchError if the two sizes differ.
void require_same_ground_set(const GroundSet& a, const GroundSet& b, const char* what);

/// Calls fn(sub) for every subset of `mask`, including the empty set and
/// `mask` itself, in decreasing bit order.
template <typename Fn>
void for_each_subset(SubsetMask mask, Fn&& fn) {
  std::uint32_t sub = mask.bits();
  while (true) {
    fn(SubsetMask(sub));
    if (sub == 0) break;
    sub = (sub - 1) & mask.bits();
  }
}

}  // namespace bicap

#endif  // BICAP_GROUND_SET_HPP
