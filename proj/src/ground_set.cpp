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

#include "bicap/ground_set.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bicap/errors.hpp"

namespace bicap {
namespace {

std::vector<std::uint32_t> build_ternary_table() {
  std::vector<std::uint32_t> table(std::size_t{1} << kMaxSubsetCriteria);
  std::array<std::uint32_t, kMaxSubsetCriteria> powers{};
  powers[0] = 1;
  for (int i = 1; i < kMaxSubsetCriteria; ++i) powers[i] = 3 * powers[i - 1];
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const int low = std::countr_zero(static_cast<std::uint32_t>(mask));
    table[mask] = table[mask & (mask - 1)] + powers[low];
  }
  return table;
}

std::string join_criteria(SubsetMask a) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int c : a.criteria()) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

SubsetMask SubsetMask::of(std::initializer_list<int> criteria) {
  return of(std::vector<int>(criteria));
}

SubsetMask SubsetMask::of(const std::vector<int>& criteria) {
  std::uint32_t bits = 0;
  for (int c : criteria) {
    if (c < 1 || c > kMaxSubsetCriteria) {
      throw PreconditionError("criterion " + std::to_string(c) + " out of range");
    }
    bits |= 1u << (c - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::criteria() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string SubsetMask::to_string() const { return join_criteria(*this); }

std::string BiSetPair::to_string() const {
  return "(" + pos.to_string() + "," + neg.to_string() + ")";
}

std::uint32_t ternary_code(std::uint32_t mask) {
  static const std::vector<std::uint32_t> table = build_ternary_table();
  return table[mask];
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxSubsetCriteria) {
    throw CapacityLimitError("ground set size " + std::to_string(n) +
                             " outside 1.." + std::to_string(kMaxSubsetCriteria));
  }
}

void GroundSet::require_pair_tabulation() const {
  if (n_ > kMaxPairCriteria) {
    throw CapacityLimitError("bi-capacity tabulation is capped at n = " +
                             std::to_string(kMaxPairCriteria) + ", got " +
                             std::to_string(n_));
  }
}

BiSetPair GroundSet::pair_at(std::size_t index) const {
  BiSetPair p;
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  for (int i = 0; i < n_; ++i) {
    const std::size_t digit = index % 3;
    index /= 3;
    if (digit == 1) pos |= 1u << i;
    if (digit == 2) neg |= 1u << i;
  }
  p.pos = SubsetMask(pos);
  p.neg = SubsetMask(neg);
  return p;
}

std::vector<BiSetPair> GroundSet::pairs() const {
  require_pair_tabulation();
  std::vector<BiSetPair> out(pair_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = pair_at(k);
  return out;
}

void require_same_ground_set(const GroundSet& a, const GroundSet& b, const char* what) {
  if (a != b) {
    throw GroundSetMismatchError(std::string(what) + ": ground sets differ (n = " +
                                 std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()) + ")");
  }
}

}  // namespace bicap
