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

#include "bicap/reference.hpp"

#include <bit>
#include <cstdint>

#include "bicap/ground_set.hpp"

namespace bicap::reference {
namespace {

double signed_term(int exponent, double x) { return exponent % 2 == 0 ? x : -x; }

}  // namespace

std::vector<double> subset_mobius(std::span<const double> game, int n) {
  const std::uint32_t size = 1u << n;
  std::vector<double> out(size, 0.0);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      if ((b & ~a) != 0) continue;
      out[a] += signed_term(std::popcount(a) - std::popcount(b), game[b]);
    }
  }
  return out;
}

std::vector<double> subset_zeta(std::span<const double> mobius, int n) {
  const std::uint32_t size = 1u << n;
  std::vector<double> out(size, 0.0);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      if ((b & ~a) == 0) out[a] += mobius[b];
    }
  }
  return out;
}

std::vector<double> pair_mobius(std::span<const double> bigame, int n) {
  const GroundSet gs(n);
  const std::size_t count = gs.pair_count();
  std::vector<double> out(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    const BiSetPair p = gs.pair_at(k);
    const SubsetMask outside = gs.complement(p.pos) - p.neg;
    for_each_subset(p.pos, [&](SubsetMask b) {
      for_each_subset(outside, [&](SubsetMask extra) {
        const int sign = (p.pos - b).size() + extra.size();
        out[k] += signed_term(sign, bigame[gs.pair_index({b, p.neg | extra})]);
      });
    });
  }
  return out;
}

std::vector<double> pair_zeta(std::span<const double> mobius, int n) {
  const GroundSet gs(n);
  const std::size_t count = gs.pair_count();
  std::vector<double> out(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    const BiSetPair p = gs.pair_at(k);
    for (std::size_t q = 0; q < count; ++q) {
      if (precedes(gs.pair_at(q), p)) out[k] += mobius[q];
    }
  }
  return out;
}

std::vector<double> interaction_from_mobius(std::span<const double> mobius, int n) {
  const std::uint32_t size = 1u << n;
  std::vector<double> out(size, 0.0);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      if ((a & ~b) != 0) continue;
      out[a] += mobius[b] / (std::popcount(b) - std::popcount(a) + 1);
    }
  }
  return out;
}

}  // namespace bicap::reference
