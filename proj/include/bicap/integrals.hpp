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

// Choquet integrals w.r.t. games, capacities, CPT models, bi-capacities and
// bipolar capacities. Every closed form is its own code path; none of them is
// computed by calling another, so that they can be checked against each other.

#ifndef BICAP_INTEGRALS_HPP
#define BICAP_INTEGRALS_HPP

#include <span>
#include <vector>

#include "bicap/act.hpp"
#include "bicap/set_function.hpp"
#include "bicap/transforms.hpp"
#include "bicap/validation.hpp"

namespace bicap {

// Games and capacities. These require f >= 0 and throw PreconditionError
// otherwise.

/// sum_i f_σ(i) [nu(A_σ(i)) - nu(A_σ(i+1))].
double choquet(const Game& game, const Act& f);
/// sum_i [f_σ(i) - f_σ(i-1)] nu(A_σ(i)), with f_σ(0) = 0.
double choquet_increments(const Game& game, const Act& f);

/// C_nu(f+) - C_nubar(f-).
double choquet_asymmetric(const Capacity& c, const Act& f);
/// C_nu(f+) - C_nu(f-).
double choquet_symmetric(const Capacity& c, const Act& f);

/// Closed forms for a 2-additive capacity given its interaction transform.
/// Throw NotTwoAdditiveError if I has support above pairs.
double choquet_asymmetric_2additive(const InteractionRep& interaction, const Act& f);
double choquet_symmetric_2additive(const InteractionRep& interaction, const Act& f);

/// Gains and losses capacities of a CPT model.
class CptModel {
 public:
  /// Throws GroundSetMismatchError if the two ground sets differ.
  CptModel(Capacity plus, Capacity minus);

  const Capacity& plus() const { return plus_; }
  const Capacity& minus() const { return minus_; }
  const GroundSet& ground_set() const { return plus_.ground_set(); }
  /// The CPT-type bi-game v(A,B) = nu+(A) - nu-(B).
  BiGame bigame() const;

 private:
  Capacity plus_;
  Capacity minus_;
};

/// C_{nu+}(f+) - C_{nu-}(f-).
double cpt(const CptModel& model, const Act& f);
/// Rank-ordered expression on f sorted increasingly, losses then gains.
double cpt_explicit(const CptModel& model, const Act& f);
/// Möbius form: minima of f over subsets of N+, maxima over subsets of N-.
double cpt_mobius(const CptModel& model, const Act& f);
/// Co-Möbius form.
double cpt_comobius(const CptModel& model, const Act& f);
/// Interaction form for 2-additive nu+ and nu-. Throws NotTwoAdditiveError.
double cpt_2additive(const CptModel& model, const Act& f);

// Bi-capacities and bi-games.

/// nu_{N+}(C) = v(C ∩ N+, C ∩ N-).
Game sign_pattern_game(const BiGame& v, SubsetMask n_plus);

/// Choquet integral of |f| w.r.t. the game nu_{N+}.
double bicap_choquet(const BiGame& v, const Act& f, ZeroSign zero_sign = ZeroSign::kPositive);
inline double bicap_choquet(const BiCapacity& v, const Act& f,
                            ZeroSign zero_sign = ZeroSign::kPositive) {
  return bicap_choquet(v.game(), f, zero_sign);
}

/// Telescoping sum over the level sets of |f|. `sigma` (0-based) must order
/// |f| nondecreasingly; empty means the canonical stable order.
double bicap_choquet_telescoping(const BiGame& v, const Act& f, std::span<const int> sigma = {});

/// Möbius form, with the minimum over an empty set read as 0.
double bicap_choquet_mobius(const MobiusRep& m, const Act& f);

/// Integral w.r.t. the bi-unanimity game u_(A,B), by case analysis.
double biunanimity_choquet(const GroundSet& ground_set, const BiSetPair& ab, const Act& f);

/// 2-additive closed form from the Möbius transform.
double bicap_choquet_2additive(const MobiusRep& m, const Act& f);

enum class InteractionForm {
  kPlain,   ///< terms grouped by sign pattern
  kSigned,  ///< terms split by the sign of each index; nonnegative coefficients
};
/// 2-additive closed forms from the interaction indices.
double bicap_choquet_2additive(const InteractionRep& interaction, const Act& f,
                               InteractionForm form);

/// Coefficient of f_i in the kSigned form, for each criterion.
std::vector<double> signed_form_coefficients(const InteractionRep& interaction, const Act& f);

struct PartialConvexity {
  double positive = 0;  ///< kSigned form at f = 1, coefficients only
  double negative = 0;  ///< minus the kSigned form at f = -1
};
/// Both sums equal 1 for a normalized 2-additive bi-capacity.
PartialConvexity partial_convexity_sums(const InteractionRep& interaction);

/// Def.-style integral of every act, in parallel.
std::vector<double> bicap_choquet_batch(const BiGame& v, std::span<const Act> acts);

// Bipolar capacities.

struct BipolarValue {
  double total = 0;
  double plus = 0;
  double minus = 0;
};

/// C+(f) - C-(f) along the permutation `sigma` (0-based, must order |f|
/// nondecreasingly; empty means the canonical stable order). The value may
/// depend on sigma when |f| has ties across signs.
BipolarValue bipolar_choquet(const BipolarCapacity& z, const Act& f,
                             std::span<const int> sigma = {});

/// Lists every (A,B) with zeta+(A,B) - zeta-(∅,B) != zeta+(A,∅) - zeta-(A,B).
ValidationReport check_eb(const BipolarCapacity& z, double tol = kDefaultTolerance);
/// v(A,B) = zeta+(A,B) - zeta-(∅,B). Throws AmbiguousBipolarError if
/// check_eb fails.
BiCapacity reduce_bipolar(const BipolarCapacity& z, double tol = kDefaultTolerance);
/// zeta+(A,B) = v(A,B) - v(∅,B), zeta-(A,B) = v(A,∅) - v(A,B).
BipolarCapacity bipolar_from_bicapacity(const BiGame& v, bool normalized = false);

// Sign reflections.

/// (Pi_A v)(B,B') = v((B ∩ A) ∪ (B' \ A), (B \ A) ∪ (B' ∩ A)).
BiGame reflect(const BiGame& v, SubsetMask a);
/// f_i on A, -f_i elsewhere.
Act reflect_act(const Act& f, SubsetMask a);

}  // namespace bicap

#endif  // BICAP_INTEGRALS_HPP
