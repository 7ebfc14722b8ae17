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

#include "bicap/set_function.hpp"

#include "bicap/errors.hpp"

namespace bicap {

Game::Game(GroundSet ground_set, std::vector<double> values)
    : ground_set_(ground_set), values_(std::move(values)) {
  if (values_.size() != ground_set_.subset_count()) {
    throw PreconditionError("game table needs 2^n = " +
                            std::to_string(ground_set_.subset_count()) +
                            " entries, got " + std::to_string(values_.size()));
  }
}

Game Game::zero(GroundSet ground_set) {
  return Game(ground_set, std::vector<double>(ground_set.subset_count(), 0.0));
}

Game Game::from_function(GroundSet ground_set,
                         const std::function<double(SubsetMask)>& fn) {
  std::vector<double> values(ground_set.subset_count());
  for (std::size_t a = 0; a < values.size(); ++a) {
    values[a] = fn(SubsetMask(static_cast<std::uint32_t>(a)));
  }
  return Game(ground_set, std::move(values));
}

Game Game::unanimity(GroundSet ground_set, SubsetMask t) {
  return from_function(ground_set, [t](SubsetMask a) { return t.is_subset_of(a) ? 1.0 : 0.0; });
}

Game Game::additive(GroundSet ground_set, std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != ground_set.size()) {
    throw PreconditionError("additive game needs one weight per criterion");
  }
  return from_function(ground_set, [&](SubsetMask a) {
    double sum = 0;
    for (int i = 0; i < ground_set.size(); ++i) {
      if (a.contains(i)) sum += weights[i];
    }
    return sum;
  });
}

BiGame::BiGame(GroundSet ground_set, std::vector<double> values)
    : ground_set_(ground_set), values_(std::move(values)) {
  ground_set_.require_pair_tabulation();
  if (values_.size() != ground_set_.pair_count()) {
    throw PreconditionError("bi-game table needs 3^n = " +
                            std::to_string(ground_set_.pair_count()) +
                            " entries, got " + std::to_string(values_.size()));
  }
}

BiGame BiGame::zero(GroundSet ground_set) {
  ground_set.require_pair_tabulation();
  return BiGame(ground_set, std::vector<double>(ground_set.pair_count(), 0.0));
}

BiGame BiGame::from_function(GroundSet ground_set,
                             const std::function<double(const BiSetPair&)>& fn) {
  ground_set.require_pair_tabulation();
  std::vector<double> values(ground_set.pair_count());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = fn(ground_set.pair_at(k));
  return BiGame(ground_set, std::move(values));
}

BiGame BiGame::unanimity(GroundSet ground_set, const BiSetPair& ab) {
  if (!ab.is_disjoint()) throw PreconditionError("bi-unanimity game needs (A,B) in Q(N)");
  return from_function(ground_set,
                       [ab](const BiSetPair& cd) { return precedes(ab, cd) ? 1.0 : 0.0; });
}

BiGame BiGame::cpt_type(const Game& plus, const Game& minus) {
  require_same_ground_set(plus.ground_set(), minus.ground_set(), "cpt_type");
  return from_function(plus.ground_set(), [&](const BiSetPair& p) {
    return plus(p.pos) - minus(p.neg);
  });
}

BipolarCapacity::BipolarCapacity(BiGame plus, BiGame minus, bool normalized)
    : plus_(std::move(plus)), minus_(std::move(minus)), normalized_(normalized) {
  require_same_ground_set(plus_.ground_set(), minus_.ground_set(), "BipolarCapacity");
}

Game conjugate(const Game& game) {
  const GroundSet& gs = game.ground_set();
  const double whole = game(gs.full());
  return Game::from_function(gs, [&](SubsetMask a) { return whole - game(gs.complement(a)); });
}

Capacity conjugate(const Capacity& capacity) {
  return Capacity(conjugate(capacity.game()), capacity.normalized());
}

Game positive_part(const BiGame& v) {
  return Game::from_function(v.ground_set(), [&](SubsetMask a) { return v(a, SubsetMask()); });
}

Game negative_part(const BiGame& v) {
  return Game::from_function(v.ground_set(), [&](SubsetMask b) { return -v(SubsetMask(), b); });
}

}  // namespace bicap
