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

#include "bicap/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bicap/errors.hpp"
#include "bicap/kernels.hpp"

namespace bicap {
namespace {

std::vector<double> factorials(int n) {
  std::vector<double> f(n + 2, 1.0);
  for (int i = 1; i < static_cast<int>(f.size()); ++i) f[i] = f[i - 1] * i;
  return f;
}

void require_space(const SparseRep& rep, IndexSpace space, const char* what) {
  if (rep.space() != space) {
    throw PreconditionError(std::string(what) +
                            (space == IndexSpace::kPairs ? ": expected a representation on Q(N)"
                                                         : ": expected a representation on 2^N"));
  }
}

BiSetPair pair_of(SubsetMask pos, SubsetMask neg) { return BiSetPair{pos, neg}; }

SubsetMask bit(int i) { return SubsetMask::singleton(i); }

std::string criterion_context(int i, const BiSetPair& ab) {
  return "i=" + std::to_string(i + 1) + " A=" + ab.pos.to_string() + " B=" + ab.neg.to_string();
}

}  // namespace

SparseRep::SparseRep(GroundSet ground_set, IndexSpace space,
                     std::map<std::size_t, double> entries)
    : ground_set_(ground_set), space_(space), entries_(entries.begin(), entries.end()) {
  if (space_ == IndexSpace::kPairs) ground_set_.require_pair_tabulation();
  const std::size_t limit =
      space_ == IndexSpace::kPairs ? ground_set_.pair_count() : ground_set_.subset_count();
  for (const auto& [key, value] : entries_) {
    if (key >= limit) throw PreconditionError("sparse entry outside the index space");
  }
}

SparseRep SparseRep::from_dense(GroundSet ground_set, IndexSpace space,
                                std::span<const double> dense) {
  std::map<std::size_t, double> entries;
  entries[0] = dense.empty() ? 0.0 : dense[0];
  for (std::size_t k = 1; k < dense.size(); ++k) {
    if (dense[k] != 0.0) entries.emplace_hint(entries.end(), k, dense[k]);
  }
  return SparseRep(ground_set, space, std::move(entries));
}

double SparseRep::at_index(std::size_t key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return it != entries_.end() && it->first == key ? it->second : 0.0;
}

double SparseRep::operator()(SubsetMask a) const {
  if (space_ != IndexSpace::kSubsets) throw PreconditionError("subset lookup on a pair table");
  return at_index(a.bits());
}

double SparseRep::operator()(const BiSetPair& p) const {
  if (space_ != IndexSpace::kPairs) throw PreconditionError("pair lookup on a subset table");
  if (!p.is_disjoint()) throw PreconditionError("pair " + p.to_string() + " is not disjoint");
  return at_index(ground_set_.pair_index(p));
}

std::vector<double> SparseRep::dense() const {
  std::vector<double> out(on_pairs() ? ground_set_.pair_count() : ground_set_.subset_count(), 0.0);
  for (const auto& [key, value] : entries_) out[key] = value;
  return out;
}

void SparseRep::for_each_subset_entry(const std::function<void(SubsetMask, double)>& fn) const {
  require_space(*this, IndexSpace::kSubsets, "for_each_subset_entry");
  for (const auto& [key, value] : entries_) fn(SubsetMask(static_cast<std::uint32_t>(key)), value);
}

void SparseRep::for_each_pair_entry(
    const std::function<void(const BiSetPair&, double)>& fn) const {
  require_space(*this, IndexSpace::kPairs, "for_each_pair_entry");
  for (const auto& [key, value] : entries_) fn(ground_set_.pair_at(key), value);
}

MobiusRep mobius(const Game& game) {
  std::vector<double> t(game.values().begin(), game.values().end());
  kernels::subset_mobius(t, game.ground_set().size());
  return MobiusRep(SparseRep::from_dense(game.ground_set(), IndexSpace::kSubsets, t));
}

Game zeta(const MobiusRep& m) {
  require_space(m, IndexSpace::kSubsets, "zeta");
  std::vector<double> t = m.dense();
  kernels::subset_zeta(t, m.ground_set().size());
  return Game(m.ground_set(), std::move(t));
}

CoMobiusRep comobius(const Game& game) {
  // With C = N \ B the defining sum becomes sum_{C ⊆ A} (-1)^{|C|} nu(N \ C).
  const GroundSet& gs = game.ground_set();
  const std::uint32_t full = gs.full().bits();
  std::vector<double> t(gs.subset_count());
  for (std::uint32_t c = 0; c < t.size(); ++c) {
    const double x = game(SubsetMask(full & ~c));
    t[c] = (std::popcount(c) % 2 == 0) ? x : -x;
  }
  kernels::subset_zeta(t, gs.size());
  return CoMobiusRep(SparseRep::from_dense(gs, IndexSpace::kSubsets, t));
}

InteractionRep interaction(const Game& game) {
  std::vector<double> m(game.values().begin(), game.values().end());
  kernels::subset_mobius(m, game.ground_set().size());
  const std::vector<double> t = kernels::interaction_from_mobius(m, game.ground_set().size());
  return InteractionRep(SparseRep::from_dense(game.ground_set(), IndexSpace::kSubsets, t));
}

double derivative(const Game& game, SubsetMask a, SubsetMask k) {
  const GroundSet& gs = game.ground_set();
  if (!gs.contains(a) || !gs.contains(k)) throw PreconditionError("derivative: set outside N");
  if (!a.disjoint_from(k)) throw PreconditionError("derivative: K must not meet A");
  double total = 0;
  const int a_size = a.size();
  for_each_subset(a, [&](SubsetMask l) {
    const double x = game(l | k);
    total += ((a_size - l.size()) % 2 == 0) ? x : -x;
  });
  return total;
}

InteractionRep interaction_direct(const Game& game) {
  const GroundSet& gs = game.ground_set();
  const int n = gs.size();
  const std::vector<double> fact = factorials(n);
  std::vector<double> out(gs.subset_count(), 0.0);
  for (std::uint32_t bits = 0; bits < out.size(); ++bits) {
    const SubsetMask a(bits);
    const int a_size = a.size();
    double total = 0;
    for_each_subset(gs.complement(a), [&](SubsetMask b) {
      const int b_size = b.size();
      total += fact[n - b_size - a_size] * fact[b_size] / fact[n - a_size + 1] *
               derivative(game, a, b);
    });
    out[bits] = total;
  }
  return InteractionRep(SparseRep::from_dense(gs, IndexSpace::kSubsets, out));
}

bool is_k_additive(const MobiusRep& m, int k, double tol) {
  require_space(m, IndexSpace::kSubsets, "is_k_additive");
  for (const auto& [key, value] : m.entries()) {
    if (std::popcount(static_cast<std::uint32_t>(key)) > k && std::abs(value) > tol) return false;
  }
  return true;
}

MobiusRep bimobius(const BiGame& v) {
  std::vector<double> t(v.values().begin(), v.values().end());
  kernels::pair_mobius(t, v.ground_set().size());
  return MobiusRep(SparseRep::from_dense(v.ground_set(), IndexSpace::kPairs, t));
}

BiGame bi_zeta(const MobiusRep& m) {
  require_space(m, IndexSpace::kPairs, "bi_zeta");
  std::vector<double> t = m.dense();
  kernels::pair_zeta(t, m.ground_set().size());
  return BiGame(m.ground_set(), std::move(t));
}

double bi_derivative(const BiGame& v, const BiSetPair& st, const BiSetPair& kl) {
  const GroundSet& gs = v.ground_set();
  if (!gs.contains(st.pos | st.neg) || !gs.contains(kl.pos | kl.neg)) {
    throw PreconditionError("bi_derivative: set outside N");
  }
  if (!st.is_disjoint() || !kl.is_disjoint()) {
    throw PreconditionError("bi_derivative: pairs must be disjoint");
  }
  if (!(kl.pos | kl.neg).disjoint_from(st.pos)) {
    throw PreconditionError("bi_derivative: (K,L) must lie in Q(N \\ S)");
  }
  if (!st.neg.is_subset_of(kl.neg)) throw PreconditionError("bi_derivative: T must be in L");
  const int s = st.pos.size();
  const int t = st.neg.size();
  double total = 0;
  for_each_subset(st.pos, [&](SubsetMask s_sub) {
    for_each_subset(st.neg, [&](SubsetMask t_sub) {
      const double x = v(kl.pos | s_sub, kl.neg - t_sub);
      total += ((s - s_sub.size() + t - t_sub.size()) % 2 == 0) ? x : -x;
    });
  });
  return total;
}

InteractionRep biinteraction(const MobiusRep& m) {
  require_space(m, IndexSpace::kPairs, "biinteraction");
  const GroundSet& gs = m.ground_set();
  const int n = gs.size();
  std::vector<double> out(gs.pair_count(), 0.0);
  // m(S',T') lies in the interval of (S,T) iff S ⊆ S' and T ⊆ N \ (S' ∪ T').
  m.for_each_pair_entry([&](const BiSetPair& p, double x) {
    if (x == 0.0) return;
    const SubsetMask rest = gs.complement(p.pos | p.neg);
    const int t_prime = p.neg.size();
    for_each_subset(p.pos, [&](SubsetMask s) {
      for_each_subset(rest, [&](SubsetMask t) {
        out[gs.pair_index({s, t})] += x / (n - s.size() - t.size() - t_prime + 1);
      });
    });
  });
  return InteractionRep(SparseRep::from_dense(gs, IndexSpace::kPairs, out));
}

InteractionRep biinteraction_direct(const BiGame& v) {
  const GroundSet& gs = v.ground_set();
  const int n = gs.size();
  if (n > kMaxDirectBiInteraction) {
    throw CapacityLimitError("biinteraction_direct is limited to n <= " +
                             std::to_string(kMaxDirectBiInteraction));
  }
  const std::vector<double> fact = factorials(n);
  std::vector<double> out(gs.pair_count(), 0.0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const BiSetPair st = gs.pair_at(idx);
    const int s = st.pos.size();
    const int t = st.neg.size();
    double total = 0;
    for_each_subset(gs.complement(st.pos | st.neg), [&](SubsetMask k) {
      const int k_size = k.size();
      const SubsetMask l = gs.complement(k | st.pos);
      total += fact[n - s - t - k_size] * fact[k_size] / fact[n - s - t + 1] *
               bi_derivative(v, st, {k, l});
    });
    out[idx] = total;
  }
  return InteractionRep(SparseRep::from_dense(gs, IndexSpace::kPairs, out));
}

bool is_k_additive_pairs(const MobiusRep& m, int k, double tol) {
  require_space(m, IndexSpace::kPairs, "is_k_additive_pairs");
  const int n = m.ground_set().size();
  bool ok = true;
  m.for_each_pair_entry([&](const BiSetPair& p, double x) {
    if (p.neg.size() < n - k && std::abs(x) > tol) ok = false;
  });
  return ok;
}

namespace {

TwoAdditiveCoords empty_coords(int n) {
  TwoAdditiveCoords c;
  c.n = n;
  c.single_pos.assign(n, 0.0);
  c.single_neg.assign(n, 0.0);
  c.pair_pos.assign(n, std::vector<double>(n, 0.0));
  c.pair_neg = c.pair_pos;
  c.cross = c.pair_pos;
  return c;
}

}  // namespace

TwoAdditiveCoords two_additive_coords(const MobiusRep& m, double tol) {
  require_space(m, IndexSpace::kPairs, "two_additive_coords");
  if (!is_two_additive(m, tol)) {
    throw NotTwoAdditiveError("Möbius transform has mass on (A,B) with |B| < n-2");
  }
  const GroundSet& gs = m.ground_set();
  const int n = gs.size();
  const SubsetMask full = gs.full();
  TwoAdditiveCoords c = empty_coords(n);
  c.origin = m(pair_of(SubsetMask(), full));
  for (int i = 0; i < n; ++i) {
    c.single_pos[i] = m(pair_of(bit(i), full - bit(i)));
    c.single_neg[i] = m(pair_of(SubsetMask(), full - bit(i)));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const SubsetMask ij = bit(i) | bit(j);
      c.pair_pos[i][j] = m(pair_of(ij, full - ij));
      c.pair_neg[i][j] = m(pair_of(SubsetMask(), full - ij));
      c.cross[i][j] = m(pair_of(bit(i), full - ij));
    }
  }
  return c;
}

TwoAdditiveCoords two_additive_coords(const InteractionRep& interaction, double tol) {
  require_space(interaction, IndexSpace::kPairs, "two_additive_coords");
  interaction.for_each_pair_entry([&](const BiSetPair& p, double x) {
    if (p.pos.size() + p.neg.size() > 2 && std::abs(x) > tol) {
      throw NotTwoAdditiveError("interaction index " + p.to_string() +
                                " of order above 2 is nonzero");
    }
  });
  const int n = interaction.ground_set().size();
  TwoAdditiveCoords c = empty_coords(n);
  c.origin = interaction(pair_of(SubsetMask(), SubsetMask()));
  for (int i = 0; i < n; ++i) {
    c.single_pos[i] = interaction(pair_of(bit(i), SubsetMask()));
    c.single_neg[i] = interaction(pair_of(SubsetMask(), bit(i)));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const SubsetMask ij = bit(i) | bit(j);
      c.pair_pos[i][j] = interaction(pair_of(ij, SubsetMask()));
      c.pair_neg[i][j] = interaction(pair_of(SubsetMask(), ij));
      c.cross[i][j] = interaction(pair_of(bit(i), bit(j)));
    }
  }
  return c;
}

MobiusRep twoadd_m_from_I(const InteractionRep& interaction, double tol) {
  const TwoAdditiveCoords ic = two_additive_coords(interaction, tol);
  const GroundSet& gs = interaction.ground_set();
  const int n = ic.n;
  const SubsetMask full = gs.full();
  std::vector<double> m(gs.pair_count(), 0.0);
  auto at = [&](SubsetMask a, SubsetMask b) -> double& { return m[gs.pair_index({a, b})]; };

  double order1 = 0;
  double order2 = 0;
  for (int i = 0; i < n; ++i) {
    double pos = ic.single_pos[i];
    double neg = ic.single_neg[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      pos -= 0.5 * (ic.cross[i][j] + ic.pair_pos[i][j]);
      neg -= 0.5 * (ic.cross[j][i] + ic.pair_neg[i][j]);
      const SubsetMask ij = bit(i) | bit(j);
      at(bit(i), full - ij) = ic.cross[i][j];
      order2 += ic.cross[i][j];
      if (i < j) {
        at(ij, full - ij) = ic.pair_pos[i][j];
        at(SubsetMask(), full - ij) = ic.pair_neg[i][j];
        order2 += ic.pair_pos[i][j] + ic.pair_neg[i][j];
      }
    }
    at(bit(i), full - bit(i)) = pos;
    at(SubsetMask(), full - bit(i)) = neg;
    order1 += pos + neg;
  }
  // I_{∅,∅} weighs m(∅,N) by 1, |T'| = n-1 terms by 1/2 and |T'| = n-2 by 1/3.
  at(SubsetMask(), full) = ic.origin - order1 / 2.0 - order2 / 3.0;
  return MobiusRep(SparseRep::from_dense(gs, IndexSpace::kPairs, m));
}

InteractionRep twoadd_I_from_m(const MobiusRep& m, double tol) {
  const TwoAdditiveCoords mc = two_additive_coords(m, tol);
  const GroundSet& gs = m.ground_set();
  const int n = mc.n;
  std::vector<double> out(gs.pair_count(), 0.0);
  auto at = [&](SubsetMask a, SubsetMask b) -> double& { return out[gs.pair_index({a, b})]; };

  double order1 = 0;
  double order2 = 0;
  for (int i = 0; i < n; ++i) {
    double pos = mc.single_pos[i];
    double neg = mc.single_neg[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      pos += 0.5 * (mc.cross[i][j] + mc.pair_pos[i][j]);
      neg += 0.5 * (mc.cross[j][i] + mc.pair_neg[i][j]);
      const SubsetMask ij = bit(i) | bit(j);
      at(bit(i), bit(j)) = mc.cross[i][j];
      order2 += mc.cross[i][j];
      if (i < j) {
        at(ij, SubsetMask()) = mc.pair_pos[i][j];
        at(SubsetMask(), ij) = mc.pair_neg[i][j];
        order2 += mc.pair_pos[i][j] + mc.pair_neg[i][j];
      }
    }
    at(bit(i), SubsetMask()) = pos;
    at(SubsetMask(), bit(i)) = neg;
    order1 += mc.single_pos[i] + mc.single_neg[i];
  }
  at(SubsetMask(), SubsetMask()) = mc.origin + order1 / 2.0 + order2 / 3.0;
  return InteractionRep(SparseRep::from_dense(gs, IndexSpace::kPairs, out));
}

namespace {

// Calls fn(i, (A,B)) for every criterion i and (A,B) ∈ Q(N \ i).
template <typename Fn>
void for_each_local_pair(const GroundSet& gs, Fn&& fn) {
  const std::size_t count = gs.pair_count();
  for (int i = 0; i < gs.size(); ++i) {
    for (std::size_t k = 0; k < count; ++k) {
      const BiSetPair ab = gs.pair_at(k);
      if (ab.pos.contains(i) || ab.neg.contains(i)) continue;
      fn(i, ab);
    }
  }
}

void check_nonnegative(ValidationReport& report, const std::string& kind, int i,
                       const BiSetPair& ab, double value, double tol) {
  if (value < -tol) report.add(kind, criterion_context(i, ab), -value);
}

}  // namespace

ValidationReport check_mobius_validity(const MobiusRep& m, double tol) {
  const TwoAdditiveCoords c = two_additive_coords(m, tol);
  const GroundSet& gs = m.ground_set();
  const int n = c.n;
  ValidationReport report;

  double total = 0;
  double empty_pos = 0;
  for (const auto& [key, value] : m.entries()) {
    total += value;
    const BiSetPair p = gs.pair_at(key);
    if (p.pos.empty() && p.neg != gs.full()) empty_pos += value;
  }
  report.check_equal("mobius_sum", "sum over Q(N)", total, 1.0, tol);
  report.check_equal("mobius_empty_sum", "sum of m(∅,B), B != N", empty_pos, 1.0, tol);
  report.check_equal("mobius_origin", "m(∅,N)", c.origin, -1.0, tol);
  report.normalized = report.ok();

  for_each_local_pair(gs, [&](int i, const BiSetPair& ab) {
    double pos = c.single_pos[i];
    double neg = c.single_neg[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!ab.neg.contains(j)) {
        pos += c.cross[i][j];
        neg += c.pair_neg[i][j];
      }
      if (ab.pos.contains(j)) {
        pos += c.pair_pos[i][j];
        neg += c.cross[j][i];
      }
    }
    check_nonnegative(report, "mobius_local_pos", i, ab, pos, tol);
    check_nonnegative(report, "mobius_local_neg", i, ab, neg, tol);
  });
  return report;
}

double interaction_condition_pos(const InteractionRep& interaction, int i, const BiSetPair& ab) {
  const TwoAdditiveCoords c = two_additive_coords(interaction, kDefaultTolerance);
  double bracket = 0;
  for (int j = 0; j < c.n; ++j) {
    if (j == i) continue;
    bracket += ab.pos.contains(j) ? c.pair_pos[i][j] : -c.pair_pos[i][j];
    bracket += ab.neg.contains(j) ? -c.cross[i][j] : c.cross[i][j];
  }
  return c.single_pos[i] + 0.5 * bracket;
}

double interaction_condition_neg(const InteractionRep& interaction, int i, const BiSetPair& ab) {
  const TwoAdditiveCoords c = two_additive_coords(interaction, kDefaultTolerance);
  double bracket = 0;
  for (int j = 0; j < c.n; ++j) {
    if (j == i) continue;
    bracket += ab.neg.contains(j) ? -c.pair_neg[i][j] : c.pair_neg[i][j];
    bracket += ab.pos.contains(j) ? c.cross[j][i] : -c.cross[j][i];
  }
  return c.single_neg[i] + 0.5 * bracket;
}

ValidationReport check_interaction_validity(const InteractionRep& interaction, double tol) {
  const TwoAdditiveCoords c = two_additive_coords(interaction, tol);
  const int n = c.n;
  ValidationReport report;

  double singles = 0;
  double neg_singles = 0;
  double cross = 0;
  double pairs = 0;
  for (int i = 0; i < n; ++i) {
    singles += c.single_pos[i] + c.single_neg[i];
    neg_singles += c.single_neg[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      cross += c.cross[i][j];
      if (i < j) pairs += c.pair_pos[i][j] + c.pair_neg[i][j];
    }
  }
  report.check_equal("interaction_singletons", "sum of I_{i,∅} + I_{∅,i}", singles, 2.0, tol);
  report.check_equal("interaction_neg_singletons", "sum of I_{∅,i}", neg_singles,
                     0.5 * cross + 1.0, tol);
  report.check_equal("interaction_origin", "I_{∅,∅}", c.origin, -(cross + pairs) / 6.0, tol);
  report.normalized = report.ok();

  for_each_local_pair(interaction.ground_set(), [&](int i, const BiSetPair& ab) {
    double pos = 0;
    double neg = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      pos += ab.pos.contains(j) ? c.pair_pos[i][j] : -c.pair_pos[i][j];
      pos += ab.neg.contains(j) ? -c.cross[i][j] : c.cross[i][j];
      neg += ab.neg.contains(j) ? -c.pair_neg[i][j] : c.pair_neg[i][j];
      neg += ab.pos.contains(j) ? c.cross[j][i] : -c.cross[j][i];
    }
    check_nonnegative(report, "interaction_local_pos", i, ab, c.single_pos[i] + 0.5 * pos, tol);
    check_nonnegative(report, "interaction_local_neg", i, ab, c.single_neg[i] + 0.5 * neg, tol);
  });
  return report;
}

}  // namespace bicap
