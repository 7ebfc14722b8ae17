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

// Parallel kernels against the serial reference, and batch evaluation against
// a plain loop.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bicap/integrals.hpp"
#include "bicap/kernels.hpp"
#include "bicap/random.hpp"
#include "bicap/reference.hpp"

namespace {

std::vector<double> random_table(std::size_t size) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> t(size);
  for (double& x : t) x = u(rng);
  return t;
}

std::size_t pow3(int n) {
  std::size_t p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

void BM_SubsetMobiusKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(std::size_t{1} << n);
  for (auto _ : state) {
    std::vector<double> t = base;
    bicap::kernels::subset_mobius(t, n);
    benchmark::DoNotOptimize(t.data());
  }
}

void BM_SubsetMobiusReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(std::size_t{1} << n);
  for (auto _ : state) benchmark::DoNotOptimize(bicap::reference::subset_mobius(base, n));
}

void BM_PairMobiusKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(pow3(n));
  for (auto _ : state) {
    std::vector<double> t = base;
    bicap::kernels::pair_mobius(t, n);
    benchmark::DoNotOptimize(t.data());
  }
}

void BM_PairMobiusReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(pow3(n));
  for (auto _ : state) benchmark::DoNotOptimize(bicap::reference::pair_mobius(base, n));
}

void BM_PairZetaKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(pow3(n));
  for (auto _ : state) {
    std::vector<double> t = base;
    bicap::kernels::pair_zeta(t, n);
    benchmark::DoNotOptimize(t.data());
  }
}

void BM_PairZetaReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> base = random_table(pow3(n));
  for (auto _ : state) benchmark::DoNotOptimize(bicap::reference::pair_zeta(base, n));
}

void BM_InteractionKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> m = random_table(std::size_t{1} << n);
  for (auto _ : state) benchmark::DoNotOptimize(bicap::kernels::interaction_from_mobius(m, n));
}

void BM_InteractionReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> m = random_table(std::size_t{1} << n);
  for (auto _ : state) benchmark::DoNotOptimize(bicap::reference::interaction_from_mobius(m, n));
}

std::vector<bicap::Act> acts_for(int n, int count) {
  std::vector<bicap::Act> acts;
  for (int k = 0; k < count; ++k) acts.push_back(bicap::generate_random_act(n, k, -2, 2));
  return acts;
}

void BM_EvalBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bicap::BiCapacity v = bicap::generate_random_bicapacity(n, 7);
  const std::vector<bicap::Act> acts = acts_for(n, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(bicap::bicap_choquet_batch(v.game(), acts));
}

void BM_EvalSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bicap::BiCapacity v = bicap::generate_random_bicapacity(n, 7);
  const std::vector<bicap::Act> acts = acts_for(n, 4096);
  for (auto _ : state) {
    std::vector<double> out;
    out.reserve(acts.size());
    for (const bicap::Act& f : acts) out.push_back(bicap::bicap_choquet_telescoping(v.game(), f));
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_SubsetMobiusKernel)->DenseRange(8, 14, 3);
BENCHMARK(BM_SubsetMobiusReference)->DenseRange(8, 14, 3);
BENCHMARK(BM_PairMobiusKernel)->DenseRange(8, 12, 2);
BENCHMARK(BM_PairMobiusReference)->DenseRange(8, 12, 2);
BENCHMARK(BM_PairZetaKernel)->DenseRange(4, 8, 2);
BENCHMARK(BM_PairZetaReference)->DenseRange(4, 8, 2);
BENCHMARK(BM_InteractionKernel)->DenseRange(8, 14, 3);
BENCHMARK(BM_InteractionReference)->DenseRange(8, 14, 3);
BENCHMARK(BM_EvalBatch)->DenseRange(4, 8, 2);
BENCHMARK(BM_EvalSerial)->DenseRange(4, 8, 2);
BENCHMARK_MAIN();
