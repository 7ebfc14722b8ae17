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

#ifndef BICAP_ACT_HPP
#define BICAP_ACT_HPP

#include <span>
#include <vector>

#include "bicap/ground_set.hpp"

namespace bicap {

/// A real vector f over the criteria; entry i is criterion i+1.
class Act {
 public:
  /// Throws PreconditionError on a non-finite entry or an empty vector.
  explicit Act(std::vector<double> values);
  Act(std::initializer_list<double> values) : Act(std::vector<double>(values)) {}

  /// (1_A, -1_B, 0 elsewhere).
  static Act ternary(const GroundSet& ground_set, const BiSetPair& ab);
  /// (1_A, 0 elsewhere).
  static Act indicator(const GroundSet& ground_set, SubsetMask a);
  static Act constant(const GroundSet& ground_set, double value);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  bool nonnegative() const;

  Act operator+(const Act& other) const;
  Act operator-() const;
  Act scaled(double factor) const;

 private:
  std::vector<double> values_;
};

/// Which side of the neutral point a zero entry belongs to. kPositive is the
/// library-wide convention (N+ = {i : f_i >= 0}); kNegative puts zeros in N-.
enum class ZeroSign { kPositive, kNegative };

struct ActDecomposition {
  std::vector<double> pos_part;  ///< f+ = f v 0
  std::vector<double> neg_part;  ///< f- = (-f) v 0
  std::vector<double> abs_values;
  SubsetMask n_plus;
  SubsetMask n_minus;
  /// 0-based criteria with |f| nondecreasing; ties by ascending index.
  std::vector<int> sigma;
  /// level_sets[k] = {sigma[k], ..., sigma[n-1]}; level_sets[n] = ∅.
  std::vector<SubsetMask> level_sets;
};

ActDecomposition decompose_act(const Act& f, ZeroSign zero_sign = ZeroSign::kPositive);

/// N+ for the given convention.
SubsetMask positive_support(const Act& f, ZeroSign zero_sign = ZeroSign::kPositive);

/// Stable sort of criteria by |f_i| (ties by index).
std::vector<int> abs_order(const Act& f);

/// True when `sigma` is a permutation of 0..n-1 ordering |f| nondecreasingly.
bool is_admissible_order(const Act& f, std::span<const int> sigma);

}  // namespace bicap

#endif  // BICAP_ACT_HPP
