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

#include "bicap/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bicap/errors.hpp"

namespace bicap {
namespace {

void require_nonnegative(const Act& f) {
  if (!f.nonnegative()) throw PreconditionError("this integral needs a nonnegative act");
}

void require_size(const GroundSet& gs, const Act& f) {
  if (f.size() != gs.size()) {
    throw GroundSetMismatchError("act has " + std::to_string(f.size()) +
                                 " entries, ground set has " + std::to_string(gs.size()));
  }
}

Act positive_part_act(const Act& f) {
  std::vector<double> out(f.size());
  for (int i = 0; i < f.size(); ++i) out[i] = std::max(f[i], 0.0);
  return Act(std::move(out));
}

Act negative_part_act(const Act& f) {
  std::vector<double> out(f.size());
  for (int i = 0; i < f.size(); ++i) out[i] = std::max(-f[i], 0.0);
  return Act(std::move(out));
}

// Minimum (maximum) of f over a set; `empty` when the set is empty.
double min_over(const Act& f, SubsetMask a, double empty = 0.0) {
  if (a.empty()) return empty;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.size(); ++i) {
    if (a.contains(i)) best = std::min(best, f[i]);
  }
  return best;
}

double max_over(const Act& f, SubsetMask a, double empty = 0.0) {
  if (a.empty()) return empty;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.size(); ++i) {
    if (a.contains(i)) best = std::max(best, f[i]);
  }
  return best;
}

std::vector<int> resolve_sigma(const Act& f, std::span<const int> sigma) {
  if (sigma.empty()) return abs_order(f);
  if (!is_admissible_order(f, sigma)) {
    throw PreconditionError("permutation does not order |f| nondecreasingly");
  }
  return std::vector<int>(sigma.begin(), sigma.end());
}

// x * (a ∧ b) when x > 0, |x| * (a ∨ b) when x < 0.
double split_by_sign(double x, double a, double b) {
  if (x > 0) return x * std::min(a, b);
  if (x < 0) return -x * std::max(a, b);
  return 0.0;
}

void require_subset_interaction_order2(const InteractionRep& interaction, double tol) {
  if (interaction.on_pairs()) throw PreconditionError("expected a capacity interaction transform");
  interaction.for_each_subset_entry([&](SubsetMask a, double x) {
    if (a.size() > 2 && std::abs(x) > tol) {
      throw NotTwoAdditiveError("interaction of " + a.to_string() + " is nonzero");
    }
  });
}

double pair_index_value(const InteractionRep& interaction, int i, int j) {
  return interaction(SubsetMask::singleton(i) | SubsetMask::singleton(j));
}

}  // namespace

double choquet(const Game& game, const Act& f) {
  require_size(game.ground_set(), f);
  require_nonnegative(f);
  const ActDecomposition d = decompose_act(f);
  double total = 0;
  for (int k = 0; k < f.size(); ++k) {
    total += f[d.sigma[k]] * (game(d.level_sets[k]) - game(d.level_sets[k + 1]));
  }
  return total;
}

double choquet_increments(const Game& game, const Act& f) {
  require_size(game.ground_set(), f);
  require_nonnegative(f);
  const ActDecomposition d = decompose_act(f);
  double total = 0;
  double previous = 0;
  for (int k = 0; k < f.size(); ++k) {
    const double x = f[d.sigma[k]];
    total += (x - previous) * game(d.level_sets[k]);
    previous = x;
  }
  return total;
}

double choquet_asymmetric(const Capacity& c, const Act& f) {
  return choquet(c.game(), positive_part_act(f)) -
         choquet(conjugate(c.game()), negative_part_act(f));
}

double choquet_symmetric(const Capacity& c, const Act& f) {
  return choquet(c.game(), positive_part_act(f)) - choquet(c.game(), negative_part_act(f));
}

double choquet_asymmetric_2additive(const InteractionRep& interaction, const Act& f) {
  require_size(interaction.ground_set(), f);
  require_subset_interaction_order2(interaction, kDefaultTolerance);
  const int n = f.size();
  double total = 0;
  for (int i = 0; i < n; ++i) {
    double spread = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double x = pair_index_value(interaction, i, j);
      spread += std::abs(x);
      if (i < j) total += split_by_sign(x, f[i], f[j]);
    }
    total += f[i] * (interaction(SubsetMask::singleton(i)) - 0.5 * spread);
  }
  return total;
}

double choquet_symmetric_2additive(const InteractionRep& interaction, const Act& f) {
  require_size(interaction.ground_set(), f);
  require_subset_interaction_order2(interaction, kDefaultTolerance);
  const int n = f.size();
  const SubsetMask n_plus = positive_support(f);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const bool i_pos = n_plus.contains(i);
    double spread = 0;
    double cross_negative = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double x = pair_index_value(interaction, i, j);
      const bool j_pos = n_plus.contains(j);
      spread += std::abs(x);
      if (i_pos != j_pos && x < 0) cross_negative += -x;
      if (i < j && i_pos == j_pos) {
        // On N- the roles of ∧ and ∨ are exchanged.
        total += i_pos ? split_by_sign(x, f[i], f[j]) : split_by_sign(x, -f[i], -f[j]) * -1.0;
      }
    }
    total += f[i] * cross_negative;
    total += f[i] * (interaction(SubsetMask::singleton(i)) - 0.5 * spread);
  }
  return total;
}

CptModel::CptModel(Capacity plus, Capacity minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  require_same_ground_set(plus_.ground_set(), minus_.ground_set(), "CPT model");
}

BiGame CptModel::bigame() const { return BiGame::cpt_type(plus_.game(), minus_.game()); }

double cpt(const CptModel& model, const Act& f) {
  require_size(model.ground_set(), f);
  return choquet(model.plus().game(), positive_part_act(f)) -
         choquet(model.minus().game(), negative_part_act(f));
}

double cpt_explicit(const CptModel& model, const Act& f) {
  require_size(model.ground_set(), f);
  const int n = f.size();
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return f[a] < f[b]; });
  int p = 0;
  while (p < n && f[sigma[p]] < 0) ++p;

  // lower[k] = {σ(1..k)}, upper[k] = {σ(k..n)} in 1-based rank notation.
  std::vector<SubsetMask> lower(n + 1);
  std::vector<SubsetMask> upper(n + 2);
  for (int k = 1; k <= n; ++k) lower[k] = lower[k - 1] | SubsetMask::singleton(sigma[k - 1]);
  for (int k = n; k >= 1; --k) upper[k] = upper[k + 1] | SubsetMask::singleton(sigma[k - 1]);
  auto value = [&](int k) { return f[sigma[k - 1]]; };

  const Capacity& plus = model.plus();
  const Capacity& minus = model.minus();
  double total = 0;
  for (int i = 1; i <= p - 1; ++i) total += (value(i) - value(i + 1)) * minus(lower[i]);
  if (p >= 1) total += value(p) * minus(lower[p]);
  if (p < n) total += value(p + 1) * plus(upper[p + 1]);
  for (int i = p + 2; i <= n; ++i) total += (value(i) - value(i - 1)) * plus(upper[i]);
  return total;
}

double cpt_mobius(const CptModel& model, const Act& f) {
  require_size(model.ground_set(), f);
  const SubsetMask n_plus = positive_support(f);
  const SubsetMask n_minus = model.ground_set().complement(n_plus);
  double total = 0;
  mobius(model.plus()).for_each_subset_entry([&](SubsetMask a, double x) {
    if (a.is_subset_of(n_plus)) total += x * min_over(f, a);
  });
  mobius(model.minus()).for_each_subset_entry([&](SubsetMask a, double x) {
    if (a.is_subset_of(n_minus)) total += x * max_over(f, a);
  });
  return total;
}

double cpt_comobius(const CptModel& model, const Act& f) {
  require_size(model.ground_set(), f);
  const SubsetMask n_plus = positive_support(f);
  const SubsetMask n_minus = model.ground_set().complement(n_plus);
  double total = 0;
  comobius(model.plus()).for_each_subset_entry([&](SubsetMask a, double x) {
    if (a.disjoint_from(n_plus)) return;
    const double signed_x = a.size() % 2 == 1 ? x : -x;
    total += signed_x * max_over(f, a);
  });
  comobius(model.minus()).for_each_subset_entry([&](SubsetMask a, double x) {
    if (a.disjoint_from(n_minus)) return;
    const double signed_x = a.size() % 2 == 1 ? x : -x;
    total += signed_x * min_over(f, a);
  });
  return total;
}

double cpt_2additive(const CptModel& model, const Act& f) {
  require_size(model.ground_set(), f);
  const InteractionRep ip = interaction(model.plus());
  const InteractionRep im = interaction(model.minus());
  require_subset_interaction_order2(ip, kDefaultTolerance);
  require_subset_interaction_order2(im, kDefaultTolerance);
  const int n = f.size();
  const SubsetMask n_plus = positive_support(f);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const bool i_pos = n_plus.contains(i);
    const InteractionRep& own = i_pos ? ip : im;
    double same = 0;
    double other = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double x = pair_index_value(own, i, j);
      const bool j_pos = n_plus.contains(j);
      if (j_pos == i_pos) {
        same += std::abs(x);
        if (i < j) {
          // Gains: x>0 weighs the min; losses: x>0 weighs the max.
          total += i_pos ? split_by_sign(x, f[i], f[j]) : -split_by_sign(x, -f[i], -f[j]);
        }
      } else {
        other += x;
      }
    }
    total += f[i] * (own(SubsetMask::singleton(i)) - 0.5 * (same + other));
  }
  return total;
}

Game sign_pattern_game(const BiGame& v, SubsetMask n_plus) {
  const GroundSet& gs = v.ground_set();
  std::vector<double> values(gs.subset_count());
  for (std::uint32_t c = 0; c < values.size(); ++c) {
    const SubsetMask set(c);
    values[c] = v(set & n_plus, set - n_plus);
  }
  return Game(gs, std::move(values));
}

double bicap_choquet(const BiGame& v, const Act& f, ZeroSign zero_sign) {
  require_size(v.ground_set(), f);
  const ActDecomposition d = decompose_act(f, zero_sign);
  return choquet(sign_pattern_game(v, d.n_plus), Act(d.abs_values));
}

double bicap_choquet_telescoping(const BiGame& v, const Act& f, std::span<const int> sigma) {
  require_size(v.ground_set(), f);
  const std::vector<int> order = resolve_sigma(f, sigma);
  const SubsetMask n_plus = positive_support(f);
  const int n = f.size();
  // Walk from the top: level set {σ(k),...,σ(n)} grows by one criterion.
  double total = 0;
  SubsetMask upper;
  double upper_value = v(SubsetMask(), SubsetMask());
  for (int k = n - 1; k >= 0; --k) {
    const SubsetMask level = upper | SubsetMask::singleton(order[k]);
    const double level_value = v(level & n_plus, level - n_plus);
    total += std::abs(f[order[k]]) * (level_value - upper_value);
    upper = level;
    upper_value = level_value;
  }
  return total;
}

double bicap_choquet_mobius(const MobiusRep& m, const Act& f) {
  if (!m.on_pairs()) throw PreconditionError("expected a bi-capacity Möbius transform");
  const GroundSet& gs = m.ground_set();
  require_size(gs, f);
  const SubsetMask n_minus = gs.complement(positive_support(f));
  double total = 0;
  m.for_each_pair_entry([&](const BiSetPair& p, double x) {
    if (p.pos.empty()) {
      total += x * min_over(f, gs.complement(p.neg) & n_minus);
    } else {
      const double inner = min_over(f, gs.complement(p.pos | p.neg) & n_minus) + min_over(f, p.pos);
      total += x * std::max(inner, 0.0);
    }
  });
  return total;
}

double biunanimity_choquet(const GroundSet& ground_set, const BiSetPair& ab, const Act& f) {
  require_size(ground_set, f);
  if (!ab.is_disjoint() || !ground_set.contains(ab.pos | ab.neg)) {
    throw PreconditionError("bi-unanimity game needs (A,B) in Q(N)");
  }
  const SubsetMask full = ground_set.full();
  if (ab.pos.empty() && ab.neg == full) return 0.0;
  if (ab.pos.empty()) return std::min(min_over(f, full - ab.neg), 0.0);
  if (ab.neg == full - ab.pos) return std::max(min_over(f, ab.pos), 0.0);
  const SubsetMask n_minus = full - positive_support(f);
  const SubsetMask free_neg = (full - (ab.pos | ab.neg)) & n_minus;
  return std::max(min_over(f, free_neg) + min_over(f, ab.pos), 0.0);
}

double bicap_choquet_2additive(const MobiusRep& m, const Act& f) {
  const TwoAdditiveCoords c = two_additive_coords(m);
  require_size(m.ground_set(), f);
  const int n = c.n;
  const SubsetMask n_plus = positive_support(f);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const bool i_pos = n_plus.contains(i);
    total += i_pos ? c.single_pos[i] * f[i] : c.single_neg[i] * f[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool j_pos = n_plus.contains(j);
      if (!i_pos && !j_pos && i < j) total += c.pair_neg[i][j] * std::min(f[i], f[j]);
      if (!i_pos && j_pos) total += c.pair_neg[i][j] * f[i];
      if (i_pos && !j_pos) total += c.cross[i][j] * std::max(f[i] + f[j], 0.0);
      if (i_pos && j_pos) {
        total += c.cross[i][j] * f[i];
        if (i < j) total += c.pair_pos[i][j] * std::min(f[i], f[j]);
      }
    }
  }
  return total;
}

namespace {

double plain_interaction_form(const TwoAdditiveCoords& c, const Act& f) {
  const int n = c.n;
  const SubsetMask n_plus = positive_support(f);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const bool i_pos = n_plus.contains(i);
    double bracket = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool j_pos = n_plus.contains(j);
      if (i_pos) {
        bracket += j_pos ? c.cross[i][j] : -c.cross[i][j];
        bracket -= c.pair_pos[i][j];
        if (!j_pos) total += c.cross[i][j] * std::max(f[i] + f[j], 0.0);
        if (j_pos && i < j) total += c.pair_pos[i][j] * std::min(f[i], f[j]);
      } else {
        bracket -= c.cross[j][i];
        bracket += j_pos ? c.pair_neg[i][j] : -c.pair_neg[i][j];
        if (!j_pos && i < j) total += c.pair_neg[i][j] * std::min(f[i], f[j]);
      }
    }
    total += f[i] * ((i_pos ? c.single_pos[i] : c.single_neg[i]) + 0.5 * bracket);
  }
  return total;
}

std::vector<double> signed_coefficients(const TwoAdditiveCoords& c, SubsetMask n_plus) {
  const int n = c.n;
  std::vector<double> coef(n);
  for (int i = 0; i < n; ++i) {
    const bool i_pos = n_plus.contains(i);
    double bracket = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool j_pos = n_plus.contains(j);
      if (i_pos) {
        bracket += j_pos ? c.cross[i][j] - std::abs(c.pair_pos[i][j])
                         : -(std::abs(c.cross[i][j]) + c.pair_pos[i][j]);
      } else {
        bracket += j_pos ? c.pair_neg[i][j] - std::abs(c.cross[j][i])
                         : -(c.cross[j][i] + std::abs(c.pair_neg[i][j]));
      }
    }
    coef[i] = (i_pos ? c.single_pos[i] : c.single_neg[i]) + 0.5 * bracket;
  }
  return coef;
}

double signed_interaction_form(const TwoAdditiveCoords& c, const Act& f) {
  const int n = c.n;
  const SubsetMask n_plus = positive_support(f);
  const std::vector<double> coef = signed_coefficients(c, n_plus);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    total += coef[i] * f[i];
    const bool i_pos = n_plus.contains(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool j_pos = n_plus.contains(j);
      if (i_pos && j_pos && i < j) total += split_by_sign(c.pair_pos[i][j], f[i], f[j]);
      if (!i_pos && !j_pos && i < j) total += split_by_sign(c.pair_neg[i][j], f[i], f[j]);
      if (i_pos && !j_pos) {
        const double x = c.cross[i][j];
        const double s = f[i] + f[j];
        if (x > 0) total += x * std::max(s, 0.0);
        if (x < 0) total += -x * std::min(s, 0.0);
      }
    }
  }
  return total;
}

}  // namespace

double bicap_choquet_2additive(const InteractionRep& interaction, const Act& f,
                               InteractionForm form) {
  const TwoAdditiveCoords c = two_additive_coords(interaction);
  require_size(interaction.ground_set(), f);
  return form == InteractionForm::kPlain ? plain_interaction_form(c, f)
                                         : signed_interaction_form(c, f);
}

std::vector<double> signed_form_coefficients(const InteractionRep& interaction, const Act& f) {
  const TwoAdditiveCoords c = two_additive_coords(interaction);
  require_size(interaction.ground_set(), f);
  return signed_coefficients(c, positive_support(f));
}

PartialConvexity partial_convexity_sums(const InteractionRep& interaction) {
  const TwoAdditiveCoords c = two_additive_coords(interaction);
  const GroundSet& gs = interaction.ground_set();
  PartialConvexity out;
  const std::vector<double> pos = signed_coefficients(c, gs.full());
  const std::vector<double> neg = signed_coefficients(c, SubsetMask());
  for (int i = 0; i < c.n; ++i) {
    out.positive += pos[i];
    out.negative += neg[i];
    for (int j = i + 1; j < c.n; ++j) {
      out.positive += std::abs(c.pair_pos[i][j]);
      out.negative += std::abs(c.pair_neg[i][j]);
    }
  }
  return out;
}

std::vector<double> bicap_choquet_batch(const BiGame& v, std::span<const Act> acts) {
  std::vector<double> out(acts.size());
  const auto count = static_cast<std::ptrdiff_t>(acts.size());
#pragma omp parallel for schedule(dynamic, 16) if (count >= 64)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    out[k] = bicap_choquet_telescoping(v, acts[k]);
  }
  return out;
}

BipolarValue bipolar_choquet(const BipolarCapacity& z, const Act& f, std::span<const int> sigma) {
  const GroundSet& gs = z.ground_set();
  require_size(gs, f);
  const std::vector<int> order = resolve_sigma(f, sigma);
  const int n = f.size();
  // Suffix sets A+_k (f >= 0) and A-_k (f <= 0) of the permutation.
  std::vector<SubsetMask> pos(n + 1);
  std::vector<SubsetMask> neg(n + 1);
  for (int k = n - 1; k >= 0; --k) {
    const int i = order[k];
    pos[k] = f[i] >= 0 ? pos[k + 1] | SubsetMask::singleton(i) : pos[k + 1];
    neg[k] = f[i] <= 0 ? neg[k + 1] | SubsetMask::singleton(i) : neg[k + 1];
  }
  BipolarValue out;
  double prev_pos = 0;
  double prev_neg = 0;
  for (int k = 0; k < n; ++k) {
    const int i = order[k];
    const double fp = std::max(f[i], 0.0);
    const double fn = std::max(-f[i], 0.0);
    // A zero increment never reaches a level set that still holds a zero.
    if (fp != prev_pos) out.plus += (fp - prev_pos) * z.plus({pos[k], neg[k]});
    if (fn != prev_neg) out.minus += (fn - prev_neg) * z.minus({pos[k], neg[k]});
    prev_pos = fp;
    prev_neg = fn;
  }
  out.total = out.plus - out.minus;
  return out;
}

ValidationReport check_eb(const BipolarCapacity& z, double tol) {
  const GroundSet& gs = z.ground_set();
  ValidationReport report;
  for (std::size_t k = 0; k < gs.pair_count(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    const double lhs = z.plus(p) - z.minus({SubsetMask(), p.neg});
    const double rhs = z.plus({p.pos, SubsetMask()}) - z.minus(p);
    report.check_equal("eb", p.to_string(), lhs, rhs, tol);
  }
  report.normalized = z.normalized();
  return report;
}

BiCapacity reduce_bipolar(const BipolarCapacity& z, double tol) {
  const ValidationReport report = check_eb(z, tol);
  if (!report.ok()) {
    throw AmbiguousBipolarError("bipolar capacity violates the unambiguity condition at " +
                                std::to_string(report.violations.size()) + " pair(s)");
  }
  const GroundSet& gs = z.ground_set();
  std::vector<double> values(gs.pair_count());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    values[k] = z.plus(p) - z.minus({SubsetMask(), p.neg});
  }
  return BiCapacity(BiGame(gs, std::move(values)), z.normalized());
}

BipolarCapacity bipolar_from_bicapacity(const BiGame& v, bool normalized) {
  const GroundSet& gs = v.ground_set();
  std::vector<double> plus(gs.pair_count());
  std::vector<double> minus(gs.pair_count());
  for (std::size_t k = 0; k < plus.size(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    plus[k] = v(p) - v(SubsetMask(), p.neg);
    minus[k] = v(p.pos, SubsetMask()) - v(p);
  }
  return BipolarCapacity(BiGame(gs, std::move(plus)), BiGame(gs, std::move(minus)), normalized);
}

BiGame reflect(const BiGame& v, SubsetMask a) {
  const GroundSet& gs = v.ground_set();
  if (!gs.contains(a)) throw PreconditionError("reflection set outside N");
  std::vector<double> values(gs.pair_count());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    values[k] = v((p.pos & a) | (p.neg - a), (p.pos - a) | (p.neg & a));
  }
  return BiGame(gs, std::move(values));
}

Act reflect_act(const Act& f, SubsetMask a) {
  std::vector<double> out(f.values().begin(), f.values().end());
  for (int i = 0; i < f.size(); ++i) {
    if (!a.contains(i)) out[i] = -out[i];
  }
  return Act(std::move(out));
}

}  // namespace bicap
