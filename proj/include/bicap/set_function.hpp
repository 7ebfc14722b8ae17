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

// Tabulated set functions. All of them are immutable after construction.
// Structural properties (monotonicity, normalization, the empty-set value) are
// not enforced by the constructors; the validators in validation.hpp check
// them so that raw and normalized objects can be handled alike.

#ifndef BICAP_SET_FUNCTION_HPP
#define BICAP_SET_FUNCTION_HPP

#include <functional>
#include <span>
#include <vector>

#include "bicap/ground_set.hpp"

namespace bicap {

/// Real-valued set function on 2^N, indexed by mask bits.
class Game {
 public:
  /// `values` must hold exactly 2^n entries.
  Game(GroundSet ground_set, std::vector<double> values);

  static Game zero(GroundSet ground_set);
  static Game from_function(GroundSet ground_set,
                            const std::function<double(SubsetMask)>& fn);
  /// Unanimity game u_T: 1 on supersets of T, 0 elsewhere.
  static Game unanimity(GroundSet ground_set, SubsetMask t);
  /// Additive game with the given singleton weights (0-based).
  static Game additive(GroundSet ground_set, std::span<const double> weights);

  const GroundSet& ground_set() const { return ground_set_; }
  double operator()(SubsetMask a) const { return values_[a.bits()]; }
  std::span<const double> values() const { return values_; }

 private:
  GroundSet ground_set_;
  std::vector<double> values_;
};

/// A game expected to be monotone; `normalized` asks validators to check
/// nu(N) = 1.
class Capacity {
 public:
  explicit Capacity(Game game, bool normalized = false)
      : game_(std::move(game)), normalized_(normalized) {}

  const Game& game() const { return game_; }
  const GroundSet& ground_set() const { return game_.ground_set(); }
  double operator()(SubsetMask a) const { return game_(a); }
  std::span<const double> values() const { return game_.values(); }
  bool normalized() const { return normalized_; }

 private:
  Game game_;
  bool normalized_;
};

/// Real-valued function on Q(N), tabulated by GroundSet::pair_index.
class BiGame {
 public:
  /// `values` must hold exactly 3^n entries; n <= 12.
  BiGame(GroundSet ground_set, std::vector<double> values);

  static BiGame zero(GroundSet ground_set);
  static BiGame from_function(GroundSet ground_set,
                              const std::function<double(const BiSetPair&)>& fn);
  /// Bi-unanimity game u_(A,B): 1 on every (C,D) with (A,B) ⊑ (C,D).
  static BiGame unanimity(GroundSet ground_set, const BiSetPair& ab);
  /// CPT-type bi-game v(A,B) = plus(A) - minus(B).
  static BiGame cpt_type(const Game& plus, const Game& minus);

  const GroundSet& ground_set() const { return ground_set_; }
  double operator()(const BiSetPair& p) const {
    return values_[ground_set_.pair_index(p)];
  }
  double operator()(SubsetMask pos, SubsetMask neg) const {
    return (*this)(BiSetPair{pos, neg});
  }
  std::span<const double> values() const { return values_; }

 private:
  GroundSet ground_set_;
  std::vector<double> values_;
};

/// A bi-game expected to be isotone w.r.t. ⊑ with v(∅,∅) = 0; `normalized`
/// asks validators to check v(N,∅) = 1 and v(∅,N) = -1.
class BiCapacity {
 public:
  explicit BiCapacity(BiGame game, bool normalized = false)
      : game_(std::move(game)), normalized_(normalized) {}

  const BiGame& game() const { return game_; }
  const GroundSet& ground_set() const { return game_.ground_set(); }
  double operator()(const BiSetPair& p) const { return game_(p); }
  double operator()(SubsetMask pos, SubsetMask neg) const { return game_(pos, neg); }
  std::span<const double> values() const { return game_.values(); }
  bool normalized() const { return normalized_; }

 private:
  BiGame game_;
  bool normalized_;
};

/// Pair-valued function zeta = (zeta+, zeta-) on Q(N).
class BipolarCapacity {
 public:
  BipolarCapacity(BiGame plus, BiGame minus, bool normalized = false);

  const GroundSet& ground_set() const { return plus_.ground_set(); }
  const BiGame& plus() const { return plus_; }
  const BiGame& minus() const { return minus_; }
  double plus(const BiSetPair& p) const { return plus_(p); }
  double minus(const BiSetPair& p) const { return minus_(p); }
  bool normalized() const { return normalized_; }

 private:
  BiGame plus_;
  BiGame minus_;
  bool normalized_;
};

/// nu_bar(A) = nu(N) - nu(N \ A). Involutive.
Game conjugate(const Game& game);
Capacity conjugate(const Capacity& capacity);

/// Restriction of a CPT-type reading: nu_plus(A) = v(A,∅), nu_minus(B) = -v(∅,B).
Game positive_part(const BiGame& v);
Game negative_part(const BiGame& v);

}  // namespace bicap

#endif  // BICAP_SET_FUNCTION_HPP
