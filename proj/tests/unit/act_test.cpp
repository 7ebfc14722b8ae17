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

#include <cmath>

#include <gtest/gtest.h>

#include "bicap/act.hpp"
#include "bicap/errors.hpp"
#include "test_support.hpp"

namespace bicap {
namespace {

TEST(ActTest, RejectsNonFiniteAndEmpty) {
  EXPECT_THROW(Act(std::vector<double>{}), PreconditionError);
  EXPECT_THROW(Act({1.0, NAN}), PreconditionError);
  EXPECT_THROW(Act({INFINITY}), PreconditionError);
}

TEST(ActTest, TernaryAndIndicator) {
  const GroundSet gs(4);
  const Act t = Act::ternary(gs, {SubsetMask::of({1}), SubsetMask::of({3, 4})});
  EXPECT_EQ(t[0], 1.0);
  EXPECT_EQ(t[1], 0.0);
  EXPECT_EQ(t[2], -1.0);
  EXPECT_EQ(t[3], -1.0);
  EXPECT_THROW(Act::ternary(gs, {SubsetMask::of({1}), SubsetMask::of({1})}), PreconditionError);
  const Act ind = Act::indicator(gs, SubsetMask::of({2}));
  EXPECT_EQ(ind[1], 1.0);
  EXPECT_TRUE(ind.nonnegative());
}

TEST(ActTest, Arithmetic) {
  const Act f{1.0, -2.0};
  const Act g{0.5, 0.5};
  EXPECT_EQ((f + g)[1], -1.5);
  EXPECT_EQ((-f)[0], -1.0);
  EXPECT_EQ(f.scaled(3)[1], -6.0);
  EXPECT_THROW(f + Act({1.0}), PreconditionError);
}

TEST(ActTest, WorkedDecomposition) {
  const ActDecomposition d = decompose_act(Act{-1.0, 3.0, 2.0});
  EXPECT_EQ(d.n_plus, SubsetMask::of({2, 3}));
  EXPECT_EQ(d.n_minus, SubsetMask::of({1}));
  EXPECT_EQ(d.sigma, (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(d.pos_part, (std::vector<double>{0, 3, 2}));
  EXPECT_EQ(d.neg_part, (std::vector<double>{1, 0, 0}));
  ASSERT_EQ(d.level_sets.size(), 4u);
  EXPECT_EQ(d.level_sets[0], SubsetMask::of({1, 2, 3}));
  EXPECT_EQ(d.level_sets[1], SubsetMask::of({2, 3}));
  EXPECT_EQ(d.level_sets[2], SubsetMask::of({2}));
  EXPECT_EQ(d.level_sets[3], SubsetMask());
}

TEST(ActTest, ZeroSignConvention) {
  const Act f{0.0, -1.0, 2.0};
  EXPECT_EQ(positive_support(f), SubsetMask::of({1, 3}));
  EXPECT_EQ(positive_support(f, ZeroSign::kNegative), SubsetMask::of({3}));
  const ActDecomposition d = decompose_act(f, ZeroSign::kNegative);
  EXPECT_EQ(d.n_minus, SubsetMask::of({1, 2}));
}

TEST(ActTest, StableOrderBreaksTiesByIndex) {
  EXPECT_EQ(abs_order(Act{2.0, -1.0, 1.0, 0.0}), (std::vector<int>{3, 1, 2, 0}));
  const Act f{1.0, -1.0};
  const std::vector<int> a{0, 1};
  const std::vector<int> b{1, 0};
  const std::vector<int> bad{0, 0};
  EXPECT_TRUE(is_admissible_order(f, a));
  EXPECT_TRUE(is_admissible_order(f, b));
  EXPECT_FALSE(is_admissible_order(f, bad));
  EXPECT_FALSE(is_admissible_order(Act{1.0, 2.0}, b));
}

// Decomposition invariants on random acts.
TEST(ActProperty, DecompositionInvariants) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.integer(1, 8);
    const Act f = trial % 2 ? gen.act(n) : gen.grid_act(n);
    const ActDecomposition d = decompose_act(f);
    EXPECT_TRUE((d.n_plus & d.n_minus).empty());
    EXPECT_EQ((d.n_plus | d.n_minus).bits(), (1u << n) - 1);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(d.pos_part[i] - d.neg_part[i], f[i]);
      EXPECT_EQ(d.pos_part[i] + d.neg_part[i], std::abs(f[i]));
    }
    EXPECT_TRUE(is_admissible_order(f, d.sigma));
    for (int k = 0; k < n; ++k) {
      EXPECT_TRUE(d.level_sets[k + 1].is_subset_of(d.level_sets[k]));
      EXPECT_NE(d.level_sets[k + 1], d.level_sets[k]);
    }
    for (int k = 0; k + 1 < n; ++k) {
      if (std::abs(f[d.sigma[k]]) == std::abs(f[d.sigma[k + 1]])) {
        EXPECT_LT(d.sigma[k], d.sigma[k + 1]);
      }
    }
  }
}

}  // namespace
}  // namespace bicap
