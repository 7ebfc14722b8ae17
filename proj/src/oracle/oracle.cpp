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

#include "bicap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include "bicap/errors.hpp"

namespace bicap::oracle {
namespace {

void require_small(int n, const OracleConfig& config) {
  config.validate();
  if (n > config.n_max) {
    throw CapacityLimitError("oracle limited to n <= " + std::to_string(config.n_max));
  }
}

// Ea along one permutation, recomputing the suffix sets at every step.
double bipolar_sum(const BipolarCapacity& z, const Act& f, const std::vector<int>& sigma) {
  const int n = f.size();
  double plus = 0;
  double minus = 0;
  double prev_plus = 0;
  double prev_minus = 0;
  for (int i = 0; i < n; ++i) {
    const double x = f[sigma[i]];
    const double xp = x > 0 ? x : 0.0;
    const double xm = x < 0 ? -x : 0.0;
    const double dp = xp - prev_plus;
    const double dm = xm - prev_minus;
    prev_plus = xp;
    prev_minus = xm;
    if (dp == 0 && dm == 0) continue;
    std::uint32_t a_plus = 0;
    std::uint32_t a_minus = 0;
    for (int j = i; j < n; ++j) {
      if (f[sigma[j]] >= 0) a_plus |= 1u << sigma[j];
      if (f[sigma[j]] <= 0) a_minus |= 1u << sigma[j];
    }
    const BiSetPair p{SubsetMask(a_plus), SubsetMask(a_minus)};
    if (dp != 0) plus += dp * z.plus(p);
    if (dm != 0) minus += dm * z.minus(p);
  }
  return plus - minus;
}

std::vector<std::vector<int>> tie_blocks(const Act& f) {
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double fa = std::fabs(f[a]);
    const double fb = std::fabs(f[b]);
    return fa < fb || (fa == fb && a < b);
  });
  std::vector<std::vector<int>> blocks;
  for (int i : order) {
    if (blocks.empty() || std::fabs(f[blocks.back().front()]) != std::fabs(f[i])) {
      blocks.emplace_back();
    }
    blocks.back().push_back(i);
  }
  return blocks;
}

std::mt19937_64 engine(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

}  // namespace

void OracleConfig::validate() const {
  if (n_max < 1 || n_max > kOracleHardCap) {
    throw PreconditionError("oracle n_max must lie in 1.." + std::to_string(kOracleHardCap));
  }
}

double choquet_levelset_oracle(const Game& game, const Act& f) {
  if (f.size() != game.ground_set().size()) throw GroundSetMismatchError("act size");
  std::vector<double> levels;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] < 0) throw PreconditionError("level-set oracle needs f >= 0");
    levels.push_back(f[i]);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0;
  double below = 0;
  for (double alpha : levels) {
    if (alpha == 0) continue;
    // On (below, alpha] the set {i : f_i >= t} is constant.
    std::uint32_t bits = 0;
    for (int i = 0; i < f.size(); ++i) {
      if (f[i] >= alpha) bits |= 1u << i;
    }
    total += (alpha - below) * game(SubsetMask(bits));
    below = alpha;
  }
  return total;
}

MobiusRep mobius_solve_oracle(const Game& game, const OracleConfig& config) {
  const GroundSet& gs = game.ground_set();
  require_small(gs.size(), config);
  const std::uint32_t count = static_cast<std::uint32_t>(gs.subset_count());
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<double> m(count, 0.0);
  for (std::uint32_t a : order) {
    double rest = 0;
    for (std::uint32_t b = 0; b < count; ++b) {
      if (b != a && (b & ~a) == 0) rest += m[b];
    }
    m[a] = game(SubsetMask(a)) - rest;
  }
  return MobiusRep(SparseRep::from_dense(gs, IndexSpace::kSubsets, m));
}

MobiusRep mobius_solve_oracle(const BiGame& v, const OracleConfig& config) {
  const GroundSet& gs = v.ground_set();
  require_small(gs.size(), config);
  const std::vector<BiSetPair> pairs = gs.pairs();
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // |A| - |B| strictly increases along ⊑, so this is a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].pos.size() - pairs[a].neg.size() < pairs[b].pos.size() - pairs[b].neg.size();
  });
  std::vector<double> m(pairs.size(), 0.0);
  for (std::size_t k : order) {
    const BiSetPair& p = pairs[k];
    double rest = 0;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const BiSetPair& r = pairs[q];
      const bool below = r.pos.is_subset_of(p.pos) && p.neg.is_subset_of(r.neg);
      if (q != k && below) rest += m[q];
    }
    m[k] = v(p) - rest;
  }
  return MobiusRep(SparseRep::from_dense(gs, IndexSpace::kPairs, m));
}

std::uint64_t admissible_permutation_count(const Act& f) {
  std::uint64_t count = 1;
  for (const auto& block : tie_blocks(f)) {
    for (std::uint64_t k = 2; k <= block.size(); ++k) count *= k;
  }
  return count;
}

std::vector<double> exhaustive_permutation_oracle(const BipolarCapacity& z, const Act& f,
                                                  const OracleConfig& config) {
  require_small(f.size(), config);
  if (f.size() != z.ground_set().size()) throw GroundSetMismatchError("act size");
  std::vector<std::vector<int>> blocks = tie_blocks(f);
  std::vector<double> totals;
  // Odometer over the permutations of each tie block.
  while (true) {
    std::vector<int> sigma;
    for (const auto& block : blocks) sigma.insert(sigma.end(), block.begin(), block.end());
    totals.push_back(bipolar_sum(z, f, sigma));
    std::size_t b = 0;
    while (b < blocks.size() && !std::next_permutation(blocks[b].begin(), blocks[b].end())) ++b;
    if (b == blocks.size()) break;
  }
  std::sort(totals.begin(), totals.end());
  std::vector<double> distinct;
  for (double t : totals) {
    if (distinct.empty() || t - distinct.back() > config.exact_tol) distinct.push_back(t);
  }
  return distinct;
}

bool is_cosigned(const Act& f, const Act& g) {
  if (f.size() != g.size()) return false;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] * g[i] < 0) return false;
  }
  return true;
}

bool is_comonotone(const Act& f, const Act& g) {
  if (f.size() != g.size()) return false;
  for (int i = 0; i < f.size(); ++i) {
    for (int j = 0; j < f.size(); ++j) {
      if ((f[i] - f[j]) * (g[i] - g[j]) < 0) return false;
    }
  }
  return true;
}

std::pair<Act, Act> make_cosigned_comonotone_pair(int n, std::uint64_t seed) {
  auto rng = engine(seed, 101);
  std::uniform_real_distribution<double> magnitude(0.05, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> a(n);
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = magnitude(rng);
    b[i] = magnitude(rng);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> f(n);
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) {
    const double sign = coin(rng) ? 1.0 : -1.0;
    f[perm[k]] = sign * a[k];
    g[perm[k]] = sign * b[k];
  }
  return {Act(std::move(f)), Act(std::move(g))};
}

std::pair<Act, Act> make_comonotone_pair(int n, std::uint64_t seed) {
  auto rng = engine(seed, 202);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> a(n);
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = value(rng);
    b[i] = value(rng);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> f(n);
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) {
    f[perm[k]] = a[k];
    g[perm[k]] = b[k];
  }
  return {Act(std::move(f)), Act(std::move(g))};
}

bool agree_or_dump(const OracleConfig& config, const std::string& name, double lhs, double rhs,
                   double tol, const std::function<Json()>& instance) {
  if (std::fabs(lhs - rhs) <= tol) return true;
  std::cerr << "mismatch " << name << ": " << lhs << " vs " << rhs << '\n';
  if (!config.dump_dir.empty()) {
    std::filesystem::create_directories(config.dump_dir);
    const auto path = std::filesystem::path(config.dump_dir) / (name + ".json");
    std::ofstream out(path);
    Json j;
    j["name"] = name;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["instance"] = instance();
    out << j.dump(1) << '\n';
    std::cerr << "  instance written to " << path.string() << '\n';
  }
  return false;
}

}  // namespace bicap::oracle
