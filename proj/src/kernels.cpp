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

#include "bicap/kernels.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>

#include "bicap/ground_set.hpp"

#ifdef BICAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace bicap::kernels {
namespace {

// Tables below this size run serially; thread start-up dominates otherwise.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 12;

template <typename Pass>
void binary_butterfly(std::span<double> table, int n, Pass pass) {
  const auto size = static_cast<std::ptrdiff_t>(table.size());
  double* t = table.data();
  for (int i = 0; i < n; ++i) {
    const std::ptrdiff_t bit = std::ptrdiff_t{1} << i;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::ptrdiff_t a = 0; a < size; ++a) {
      if (a & bit) pass(t[a ^ bit], t[a]);
    }
  }
}

template <typename Pass>
void ternary_butterfly(std::span<double> table, int n, Pass pass) {
  const auto size = static_cast<std::ptrdiff_t>(table.size());
  double* t = table.data();
  std::ptrdiff_t stride = 1;
  for (int i = 0; i < n; ++i) {
    const std::ptrdiff_t block = 3 * stride;
    const std::ptrdiff_t groups = size / 3;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::ptrdiff_t g = 0; g < groups; ++g) {
      const std::ptrdiff_t base = (g / stride) * block + (g % stride);
      pass(t[base], t[base + stride], t[base + 2 * stride]);
    }
    stride = block;
  }
}

}  // namespace

int max_threads() {
#ifdef BICAP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void subset_zeta(std::span<double> table, int n) {
  binary_butterfly(table, n, [](double low, double& high) { high += low; });
}

void subset_mobius(std::span<double> table, int n) {
  binary_butterfly(table, n, [](double low, double& high) { high -= low; });
}

void superset_zeta(std::span<double> table, int n) {
  const auto size = static_cast<std::ptrdiff_t>(table.size());
  double* t = table.data();
  for (int i = 0; i < n; ++i) {
    const std::ptrdiff_t bit = std::ptrdiff_t{1} << i;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::ptrdiff_t a = 0; a < size; ++a) {
      if (!(a & bit)) t[a] += t[a | bit];
    }
  }
}

void pair_zeta(std::span<double> table, int n) {
  ternary_butterfly(table, n, [](double& free, double& pos, double& neg) {
    free += neg;
    pos += free;
  });
}

void pair_mobius(std::span<double> table, int n) {
  ternary_butterfly(table, n, [](double& free, double& pos, double& neg) {
    pos -= free;
    free -= neg;
  });
}

std::vector<double> interaction_from_mobius(std::span<const double> mobius, int n) {
  const auto size = static_cast<std::ptrdiff_t>(mobius.size());
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<double> out(mobius.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 64) if (size >= kParallelThreshold)
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    const auto set = static_cast<std::uint32_t>(a);
    const std::uint32_t rest = full & ~set;
    double sum = 0;
    // Enumerate B = A ∪ extra for every extra ⊆ N \ A.
    std::uint32_t extra = rest;
    while (true) {
      sum += mobius[set | extra] / (std::popcount(extra) + 1);
      if (extra == 0) break;
      extra = (extra - 1) & rest;
    }
    out[a] = sum;
  }
  return out;
}

}  // namespace bicap::kernels
