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

#include "bicap/act.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bicap/errors.hpp"

namespace bicap {

Act::Act(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || values_.size() > kMaxSubsetCriteria) {
    throw PreconditionError("act needs between 1 and 16 entries");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw PreconditionError("act entries must be finite");
  }
}

Act Act::ternary(const GroundSet& ground_set, const BiSetPair& ab) {
  if (!ab.is_disjoint()) throw PreconditionError("ternary act needs disjoint (A,B)");
  std::vector<double> f(ground_set.size(), 0.0);
  for (int i = 0; i < ground_set.size(); ++i) {
    if (ab.pos.contains(i)) f[i] = 1.0;
    if (ab.neg.contains(i)) f[i] = -1.0;
  }
  return Act(std::move(f));
}

Act Act::indicator(const GroundSet& ground_set, SubsetMask a) {
  return ternary(ground_set, BiSetPair{a, SubsetMask()});
}

Act Act::constant(const GroundSet& ground_set, double value) {
  return Act(std::vector<double>(ground_set.size(), value));
}

bool Act::nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x >= 0; });
}

Act Act::operator+(const Act& other) const {
  if (other.size() != size()) throw PreconditionError("act sizes differ");
  std::vector<double> out(values_);
  for (int i = 0; i < size(); ++i) out[i] += other.values_[i];
  return Act(std::move(out));
}

Act Act::operator-() const { return scaled(-1.0); }

Act Act::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& x : out) x *= factor;
  return Act(std::move(out));
}

SubsetMask positive_support(const Act& f, ZeroSign zero_sign) {
  std::uint32_t bits = 0;
  for (int i = 0; i < f.size(); ++i) {
    const bool positive = zero_sign == ZeroSign::kPositive ? f[i] >= 0 : f[i] > 0;
    if (positive) bits |= 1u << i;
  }
  return SubsetMask(bits);
}

std::vector<int> abs_order(const Act& f) {
  std::vector<int> sigma(f.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](int a, int b) { return std::abs(f[a]) < std::abs(f[b]); });
  return sigma;
}

bool is_admissible_order(const Act& f, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != f.size()) return false;
  std::uint32_t seen = 0;
  for (int i : sigma) {
    if (i < 0 || i >= f.size() || ((seen >> i) & 1u)) return false;
    seen |= 1u << i;
  }
  for (std::size_t k = 1; k < sigma.size(); ++k) {
    if (std::abs(f[sigma[k - 1]]) > std::abs(f[sigma[k]])) return false;
  }
  return true;
}

ActDecomposition decompose_act(const Act& f, ZeroSign zero_sign) {
  const int n = f.size();
  ActDecomposition d;
  d.pos_part.resize(n);
  d.neg_part.resize(n);
  d.abs_values.resize(n);
  for (int i = 0; i < n; ++i) {
    d.pos_part[i] = std::max(f[i], 0.0);
    d.neg_part[i] = std::max(-f[i], 0.0);
    d.abs_values[i] = std::abs(f[i]);
  }
  d.n_plus = positive_support(f, zero_sign);
  d.n_minus = SubsetMask((1u << n) - 1u) - d.n_plus;
  d.sigma = abs_order(f);
  d.level_sets.assign(n + 1, SubsetMask());
  for (int k = n - 1; k >= 0; --k) {
    d.level_sets[k] = d.level_sets[k + 1] | SubsetMask::singleton(d.sigma[k]);
  }
  return d;
}

}  // namespace bicap
