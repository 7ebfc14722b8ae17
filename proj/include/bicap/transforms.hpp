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

// Möbius, co-Möbius and interaction representations of games and bi-games,
// plus the 2-additive conversions and validity checks for bi-capacities.

#ifndef BICAP_TRANSFORMS_HPP
#define BICAP_TRANSFORMS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bicap/ground_set.hpp"
#include "bicap/set_function.hpp"
#include "bicap/validation.hpp"

namespace bicap {

/// Which index space a sparse representation lives on.
enum class IndexSpace { kSubsets, kPairs };

/// Sparse table over 2^N or Q(N). Keys are subset bits or pair indices; an
/// absent key reads as 0. Entries are kept sorted by key.
class SparseRep {
 public:
  SparseRep(GroundSet ground_set, IndexSpace space, std::map<std::size_t, double> entries = {});

  /// Keeps every nonzero entry of a dense table, plus the empty-set (or
  /// (∅,∅)) entry.
  static SparseRep from_dense(GroundSet ground_set, IndexSpace space,
                              std::span<const double> dense);

  const GroundSet& ground_set() const { return ground_set_; }
  IndexSpace space() const { return space_; }
  bool on_pairs() const { return space_ == IndexSpace::kPairs; }

  double operator()(SubsetMask a) const;
  double operator()(const BiSetPair& p) const;
  double at_index(std::size_t key) const;

  const std::vector<std::pair<std::size_t, double>>& entries() const { return entries_; }
  std::vector<double> dense() const;

  void for_each_subset_entry(const std::function<void(SubsetMask, double)>& fn) const;
  void for_each_pair_entry(const std::function<void(const BiSetPair&, double)>& fn) const;

 private:
  GroundSet ground_set_;
  IndexSpace space_;
  std::vector<std::pair<std::size_t, double>> entries_;
};

/// m^nu on 2^N, or m^v on Q(N).
class MobiusRep : public SparseRep {
 public:
  using SparseRep::SparseRep;
  explicit MobiusRep(SparseRep rep) : SparseRep(std::move(rep)) {}
};

/// Co-Möbius (commonality) transform on 2^N.
class CoMobiusRep : public SparseRep {
 public:
  using SparseRep::SparseRep;
  explicit CoMobiusRep(SparseRep rep) : SparseRep(std::move(rep)) {}
};

/// I^nu(A) on 2^N, or I_{S,T} on Q(N).
class InteractionRep : public SparseRep {
 public:
  using SparseRep::SparseRep;
  explicit InteractionRep(SparseRep rep) : SparseRep(std::move(rep)) {}
};

// Capacities and games.

MobiusRep mobius(const Game& game);
inline MobiusRep mobius(const Capacity& c) { return mobius(c.game()); }
/// Inverse of mobius (subset family).
Game zeta(const MobiusRep& m);
/// m̌(A) = sum_{B ⊇ N\A} (-1)^{n-|B|} nu(B).
CoMobiusRep comobius(const Game& game);
inline CoMobiusRep comobius(const Capacity& c) { return comobius(c.game()); }
/// Interaction transform, computed from the Möbius transform.
InteractionRep interaction(const Game& game);
inline InteractionRep interaction(const Capacity& c) { return interaction(c.game()); }
/// The same transform, summed literally through the finite differences.
InteractionRep interaction_direct(const Game& game);

/// Delta_A nu(K) = sum_{L ⊆ A} (-1)^{|A|-|L|} nu(L ∪ K). Requires K ∩ A = ∅.
double derivative(const Game& game, SubsetMask a, SubsetMask k);

/// True when m vanishes on every subset of more than k criteria (within tol).
bool is_k_additive(const MobiusRep& m, int k, double tol = 0.0);

// Bi-capacities and bi-games.

MobiusRep bimobius(const BiGame& v);
/// Inverse of bimobius (pair family).
BiGame bi_zeta(const MobiusRep& m);

/// Delta_{S,T} v(K,L) = sum_{S' ⊆ S, T' ⊆ T} (-1)^{|S\S'|+|T\T'|} v(K ∪ S', L \ T').
/// Requires (S,T) disjoint, (K,L) ∈ Q(N \ S) and T ⊆ L.
double bi_derivative(const BiGame& v, const BiSetPair& st, const BiSetPair& kl);

/// I_{S,T} from the Möbius transform: each m(S',T') is spread over the
/// (S,T) whose interval contains it, with weight 1/(n-|S|-|T|-|T'|+1).
InteractionRep biinteraction(const MobiusRep& m);
inline InteractionRep biinteraction(const BiGame& v) { return biinteraction(bimobius(v)); }
inline constexpr int kMaxDirectBiInteraction = 10;
/// Literal definition through Delta_{S,T}; n <= 10.
InteractionRep biinteraction_direct(const BiGame& v);

/// k-additivity of a bi-game: m(A,B) = 0 whenever |B| < n - k.
bool is_k_additive_pairs(const MobiusRep& m, int k, double tol = 0.0);
inline bool is_two_additive(const MobiusRep& m, double tol = 0.0) {
  return is_k_additive_pairs(m, 2, tol);
}

/// Order-2 coordinates of a 2-additive bi-game, 0-based criteria.
/// For a Möbius rep: single_pos[i] = m(i,i^c), single_neg[i] = m(∅,i^c),
/// pair_pos[i][j] = m(ij,(ij)^c), pair_neg[i][j] = m(∅,(ij)^c),
/// cross[i][j] = m(i,(ij)^c), origin = m(∅,N).
/// For an interaction rep: I_{i,∅}, I_{∅,i}, I_{ij,∅}, I_{∅,ij}, I_{i,j} and
/// origin = I_{∅,∅}.
/// Diagonals of the matrices are zero.
struct TwoAdditiveCoords {
  int n = 0;
  std::vector<double> single_pos;
  std::vector<double> single_neg;
  std::vector<std::vector<double>> pair_pos;
  std::vector<std::vector<double>> pair_neg;
  std::vector<std::vector<double>> cross;
  double origin = 0;
};

/// Throws NotTwoAdditiveError when m has mass off the order-2 support.
TwoAdditiveCoords two_additive_coords(const MobiusRep& m, double tol = kDefaultTolerance);
/// Throws NotTwoAdditiveError when some |S|+|T| > 2 entry exceeds tol.
TwoAdditiveCoords two_additive_coords(const InteractionRep& interaction,
                                      double tol = kDefaultTolerance);

/// Möbius transform of a 2-additive bi-game from its interaction indices.
/// Reads I_{∅,∅}, I_{i,∅}, I_{∅,i}, I_{ij,∅}, I_{∅,ij} and I_{i,j}; throws
/// NotTwoAdditiveError if any other entry exceeds tol.
MobiusRep twoadd_m_from_I(const InteractionRep& interaction, double tol = kDefaultTolerance);
/// Inverse conversion; throws NotTwoAdditiveError unless m is 2-additive.
InteractionRep twoadd_I_from_m(const MobiusRep& m, double tol = kDefaultTolerance);

/// Conditions for m to be the Möbius transform of a normalized 2-additive
/// bi-capacity: the three sum identities and the two families of local
/// monotonicity inequalities, one per criterion i and (A,B) ∈ Q(N\i).
ValidationReport check_mobius_validity(const MobiusRep& m, double tol = kDefaultTolerance);
/// The same conditions expressed on the interaction indices.
ValidationReport check_interaction_validity(const InteractionRep& interaction,
                                            double tol = kDefaultTolerance);

/// Left-hand sides of the two local monotonicity inequalities on I, for the
/// 0-based criterion i and (A,B) ∈ Q(N\i).
double interaction_condition_pos(const InteractionRep& interaction, int i, const BiSetPair& ab);
double interaction_condition_neg(const InteractionRep& interaction, int i, const BiSetPair& ab);

}  // namespace bicap

#endif  // BICAP_TRANSFORMS_HPP
