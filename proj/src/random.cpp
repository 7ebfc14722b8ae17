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

#include "bicap/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bicap/errors.hpp"
#include "bicap/kernels.hpp"

namespace bicap {
namespace {

// One engine per (seed, stream) so that the generators do not share draws.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), 0x62696361u};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Strictly positive weights summing to one.
std::vector<double> simplex_weights(std::mt19937_64& rng, int count) {
  std::vector<double> w(count);
  double total = 0;
  for (double& x : w) {
    x = 0.05 + std::exponential_distribution<double>(1.0)(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

int rank(const BiSetPair& p) { return p.pos.size() - p.neg.size(); }

// Raw draws plus rank offset, then v(p) <- max(v(p), v(lower covers)) in
// increasing rank order so that the table becomes isotone w.r.t. ⊑.
std::vector<double> isotone_pair_table(const GroundSet& gs, std::mt19937_64& rng,
                                       bool zero_on_empty_pos) {
  const std::size_t count = gs.pair_count();
  std::vector<double> table(count);
  std::vector<std::vector<std::size_t>> by_rank(2 * gs.size() + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const BiSetPair p = gs.pair_at(k);
    table[k] = uniform(rng) + rank(p);
    // Without the shift every entry of negative rank would be repaired up to
    // the zero floor on (∅,·).
    if (zero_on_empty_pos) table[k] = p.pos.empty() ? 0.0 : table[k] + gs.size();
    by_rank[rank(p) + gs.size()].push_back(k);
  }
  for (const auto& bucket : by_rank) {
    for (std::size_t k : bucket) {
      const BiSetPair p = gs.pair_at(k);
      double best = table[k];
      for (int i = 0; i < gs.size(); ++i) {
        const SubsetMask e = SubsetMask::singleton(i);
        if (p.pos.contains(i)) {
          best = std::max(best, table[gs.pair_index({p.pos - e, p.neg})]);
        } else if (!p.neg.contains(i)) {
          best = std::max(best, table[gs.pair_index({p.pos, p.neg | e})]);
        }
      }
      table[k] = best;
    }
  }
  return table;
}

void require_positive(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
}

}  // namespace

Capacity generate_random_capacity(int n, std::uint64_t seed) {
  require_positive(n);
  const GroundSet gs(n);
  auto rng = make_engine(seed, 1);
  std::vector<double> values(gs.subset_count(), 0.0);
  for (std::uint32_t a = 1; a < values.size(); ++a) {
    values[a] = uniform(rng) + std::popcount(a);
  }
  // Subsets precede supersets in numeric order.
  for (std::uint32_t a = 1; a < values.size(); ++a) {
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      const std::uint32_t lower = a & ~(rest & (~rest + 1));
      values[a] = std::max(values[a], values[lower]);
    }
  }
  const double top = values.back();
  for (double& x : values) x /= top;
  return Capacity(Game(gs, std::move(values)), true);
}

BiCapacity generate_random_bicapacity(int n, std::uint64_t seed) {
  require_positive(n);
  const GroundSet gs(n);
  gs.require_pair_tabulation();
  auto rng = make_engine(seed, 2);
  const std::size_t origin = 0;
  const std::size_t top = gs.pair_index({gs.full(), SubsetMask()});
  const std::size_t bottom = gs.pair_index({SubsetMask(), gs.full()});
  while (true) {
    std::vector<double> table = isotone_pair_table(gs, rng, false);
    const double mid = table[origin];
    const double above = table[top] - mid;
    const double below = mid - table[bottom];
    if (!(above > 0) || !(below > 0)) continue;
    // Piecewise affine and nondecreasing, so isotonicity survives rounding.
    for (double& x : table) x = x >= mid ? (x - mid) / above : (x - mid) / below;
    return BiCapacity(BiGame(gs, std::move(table)), true);
  }
}

BipolarCapacity generate_random_bipolar(int n, std::uint64_t seed) {
  require_positive(n);
  const GroundSet gs(n);
  gs.require_pair_tabulation();
  auto rng = make_engine(seed, 3);
  const std::size_t top = gs.pair_index({gs.full(), SubsetMask()});

  auto draw = [&]() {
    std::vector<double> t = isotone_pair_table(gs, rng, true);
    const double scale = t[top];
    for (double& x : t) x /= scale;
    return t;
  };
  std::vector<double> plus = draw();
  // zeta-(A,B) = g(B,A) with g isotone, zero on (∅,·) and g(N,∅) = 1.
  const std::vector<double> g = draw();
  std::vector<double> minus(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    minus[k] = g[gs.pair_index({p.neg, p.pos})];
  }
  return BipolarCapacity(BiGame(gs, std::move(plus)), BiGame(gs, std::move(minus)), true);
}

BiCapacity generate_random_2additive_bicapacity(int n, std::uint64_t seed) {
  require_positive(n);
  const GroundSet gs(n);
  gs.require_pair_tabulation();
  auto rng = make_engine(seed, 4);
  const SubsetMask full = gs.full();
  auto e = [](int i) { return SubsetMask::singleton(i); };

  // c[i][j] = m(ij,(ij)^c), d[i][j] = m(i,(ij)^c), h[i][j] = m(∅,(ij)^c).
  std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> d = c;
  std::vector<std::vector<double>> h = c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      d[i][j] = uniform(rng, -1, 1);
      if (i < j) {
        c[i][j] = c[j][i] = uniform(rng, -1, 1);
        h[i][j] = h[j][i] = uniform(rng, -1, 1);
      }
    }
  }
  // Minimal singleton masses keeping every monotonicity inequality >= 0.
  std::vector<double> need_pos(n, 0.0);
  std::vector<double> need_neg(n, 0.0);
  double pair_pos_sum = 0;
  double pair_neg_sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      need_pos[i] -= std::min({0.0, d[i][j], d[i][j] + c[i][j]});
      need_neg[i] -= std::min({0.0, h[i][j], h[i][j] + d[j][i]});
      pair_pos_sum += d[i][j] + (i < j ? c[i][j] : 0.0);
      if (i < j) pair_neg_sum += h[i][j];
    }
  }
  double need_pos_sum = 0;
  double need_neg_sum = 0;
  for (int i = 0; i < n; ++i) {
    need_pos_sum += need_pos[i];
    need_neg_sum += need_neg[i];
  }
  double limit = 1.0;
  if (need_pos_sum + pair_pos_sum > 0) limit = std::min(limit, 1.0 / (need_pos_sum + pair_pos_sum));
  if (need_neg_sum + pair_neg_sum > 0) limit = std::min(limit, 1.0 / (need_neg_sum + pair_neg_sum));
  const double scale = uniform(rng, 0.2, 0.9) * limit;

  const std::vector<double> w_pos = simplex_weights(rng, n);
  const std::vector<double> w_neg = simplex_weights(rng, n);
  const double slack_pos = 1.0 - scale * (pair_pos_sum + need_pos_sum);
  const double slack_neg = 1.0 - scale * (pair_neg_sum + need_neg_sum);

  std::vector<double> m(gs.pair_count(), 0.0);
  auto at = [&](SubsetMask a, SubsetMask b) -> double& { return m[gs.pair_index({a, b})]; };
  at(SubsetMask(), full) = -1.0;
  for (int i = 0; i < n; ++i) {
    at(e(i), full - e(i)) = scale * need_pos[i] + slack_pos * w_pos[i];
    at(SubsetMask(), full - e(i)) = scale * need_neg[i] + slack_neg * w_neg[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SubsetMask rest = full - e(i) - e(j);
      at(e(i), rest) = scale * d[i][j];
      if (i < j) {
        at(e(i) | e(j), rest) = scale * c[i][j];
        at(SubsetMask(), rest) = scale * h[i][j];
      }
    }
  }
  kernels::pair_zeta(m, n);
  // Remove rounding noise on the three anchors.
  m[0] = 0.0;
  m[gs.pair_index({full, SubsetMask()})] = 1.0;
  m[gs.pair_index({SubsetMask(), full})] = -1.0;
  return BiCapacity(BiGame(gs, std::move(m)), true);
}

Capacity generate_random_2additive_capacity(int n, std::uint64_t seed) {
  require_positive(n);
  const GroundSet gs(n);
  auto rng = make_engine(seed, 5);
  std::vector<double> m(gs.subset_count(), 0.0);
  std::vector<double> need(n, 0.0);
  double pair_sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double x = uniform(rng, -1, 1);
      m[(1u << i) | (1u << j)] = x;
      pair_sum += x;
      need[i] += std::max(0.0, -x);
      need[j] += std::max(0.0, -x);
    }
  }
  double need_sum = 0;
  for (double x : need) need_sum += x;
  double limit = 1.0;
  if (need_sum + pair_sum > 0) limit = 1.0 / (need_sum + pair_sum);
  const double scale = uniform(rng, 0.2, 0.9) * limit;
  const std::vector<double> w = simplex_weights(rng, n);
  const double slack = 1.0 - scale * (pair_sum + need_sum);
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (std::popcount(static_cast<std::uint32_t>(a)) == 2) m[a] *= scale;
  }
  for (int i = 0; i < n; ++i) m[1u << i] = scale * need[i] + slack * w[i];
  kernels::subset_zeta(m, n);
  m[0] = 0.0;
  m.back() = 1.0;
  return Capacity(Game(gs, std::move(m)), true);
}

Act generate_random_act(int n, std::uint64_t seed, double lo, double hi) {
  require_positive(n);
  auto rng = make_engine(seed, 6);
  std::vector<double> f(n);
  for (double& x : f) x = uniform(rng, lo, hi);
  return Act(std::move(f));
}

Act generate_tied_act(int n, std::uint64_t seed) {
  require_positive(n);
  auto rng = make_engine(seed, 7);
  std::uniform_int_distribution<int> grid(-2, 2);
  std::vector<double> f(n);
  for (double& x : f) x = 0.5 * grid(rng);
  return Act(std::move(f));
}

}  // namespace bicap
