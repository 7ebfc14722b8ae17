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

// 2-additive bi-capacities: coordinate conversions, validity conditions and
// the closed-form integrals.

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "bicap/errors.hpp"
#include "bicap/integrals.hpp"
#include "bicap/random.hpp"
#include "bicap/transforms.hpp"
#include "test_support.hpp"

namespace bicap {
namespace {

using testing::Gen;

// Möbius transform supported on |B| >= n - 2 with arbitrary values, except
// that m(∅,N) is chosen so that v(∅,∅) = 0.
MobiusRep random_two_additive_mobius(Gen& gen, int n) {
  const GroundSet gs(n);
  std::map<std::size_t, double> entries;
  double empty_pos = 0;
  for (const BiSetPair& p : gs.pairs()) {
    if (p.neg.size() < n - 2 || p == BiSetPair{SubsetMask(), gs.full()}) continue;
    const double x = gen.uniform(-1, 1);
    entries[gs.pair_index(p)] = x;
    if (p.pos.empty()) empty_pos += x;
  }
  entries[gs.pair_index({SubsetMask(), gs.full()})] = -empty_pos;
  return MobiusRep(gs, IndexSpace::kPairs, entries);
}

SubsetMask e(int i) { return SubsetMask::singleton(i); }

struct Sums {
  double ordered_cross = 0;  // sum over i != j of I_{i,j}
  double pair_pos = 0;       // sum over {i,j} of I_{ij,∅}
  double pair_neg = 0;       // sum over {i,j} of I_{∅,ij}
  double single_pos = 0;
  double single_neg = 0;
};

Sums sums(const InteractionRep& in, int n) {
  Sums s;
  for (int i = 0; i < n; ++i) {
    s.single_pos += in({e(i), SubsetMask()});
    s.single_neg += in({SubsetMask(), e(i)});
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      s.ordered_cross += in({e(i), e(j)});
      if (i < j) {
        s.pair_pos += in({e(i) | e(j), SubsetMask()});
        s.pair_neg += in({SubsetMask(), e(i) | e(j)});
      }
    }
  }
  return s;
}

TEST(TwoAdditiveTest, MobiusFromInteractionSpotValues) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const GroundSet gs(n);
      const MobiusRep m = bimobius(generate_random_2additive_bicapacity(n, seed).game());
      const InteractionRep in = biinteraction(m);
      const SubsetMask full = gs.full();
      for (int i = 0; i < n; ++i) {
        double pos_sum = 0;
        double neg_sum = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const SubsetMask ij = e(i) | e(j);
          EXPECT_NEAR(m({ij, full - ij}), in({ij, SubsetMask()}), testing::kTol);
          EXPECT_NEAR(m({SubsetMask(), full - ij}), in({SubsetMask(), ij}), testing::kTol);
          EXPECT_NEAR(m({e(i), full - ij}), in({e(i), e(j)}), testing::kTol);
          pos_sum += in({e(i), e(j)}) + in({ij, SubsetMask()});
          neg_sum += in({e(j), e(i)}) + in({SubsetMask(), ij});
        }
        EXPECT_NEAR(m({e(i), full - e(i)}), in({e(i), SubsetMask()}) - 0.5 * pos_sum,
                    testing::kTol);
        EXPECT_NEAR(m({SubsetMask(), full - e(i)}), in({SubsetMask(), e(i)}) - 0.5 * neg_sum,
                    testing::kTol);
      }
    }
  }
}

TEST(TwoAdditiveProperty, ConversionsAreInverse) {
  Gen gen(41);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const MobiusRep m = random_two_additive_mobius(gen, n);
      const InteractionRep in = twoadd_I_from_m(m);
      EXPECT_LT(testing::max_abs_diff(in.dense(), biinteraction(m).dense()), testing::kTol);
      EXPECT_LT(testing::max_abs_diff(twoadd_m_from_I(in).dense(), m.dense()), testing::kTol);
    }
  }
}

TEST(TwoAdditiveTest, CoordinatesExposeOrderTwoData) {
  Gen gen(42);
  const int n = 4;
  const MobiusRep m = random_two_additive_mobius(gen, n);
  const TwoAdditiveCoords c = two_additive_coords(m);
  const SubsetMask full = GroundSet(n).full();
  EXPECT_EQ(c.n, n);
  EXPECT_EQ(c.origin, m({SubsetMask(), full}));
  EXPECT_EQ(c.single_pos[1], m({e(1), full - e(1)}));
  EXPECT_EQ(c.pair_neg[0][2], m({SubsetMask(), full - (e(0) | e(2))}));
  EXPECT_EQ(c.cross[3][1], m({e(3), full - (e(1) | e(3))}));
  EXPECT_EQ(c.cross[1][1], 0.0);
}

TEST(TwoAdditiveTest, RejectsHigherOrderInput) {
  const GroundSet gs(3);
  const MobiusRep m = bimobius(generate_random_bicapacity(3, 1).game());
  EXPECT_THROW(twoadd_I_from_m(m), NotTwoAdditiveError);
  EXPECT_THROW(two_additive_coords(m), NotTwoAdditiveError);
  EXPECT_THROW(bicap_choquet_2additive(m, Act{1.0, 0.5, -0.2}), NotTwoAdditiveError);
  EXPECT_THROW(twoadd_m_from_I(biinteraction(m)), NotTwoAdditiveError);
}

TEST(TwoAdditiveProperty, InteractionIdentities) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const InteractionRep in =
        biinteraction(bimobius(generate_random_2additive_bicapacity(n, seed).game()));
    const Sums s = sums(in, n);
    EXPECT_NEAR(s.single_pos + s.single_neg, 2.0, testing::kTol);
    EXPECT_NEAR(s.single_neg, 0.5 * s.ordered_cross + 1.0, testing::kTol);
    EXPECT_NEAR(in({SubsetMask(), SubsetMask()}),
                -(s.ordered_cross + s.pair_pos + s.pair_neg) / 6.0, testing::kTol);
  }
}

TEST(TwoAdditiveTest, MobiusValidityOnValidInstances) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const BiCapacity v = generate_random_2additive_bicapacity(n, seed);
      const MobiusRep m = bimobius(v.game());
      EXPECT_TRUE(check_mobius_validity(m).ok()) << check_mobius_validity(m).summary();
      EXPECT_TRUE(check_interaction_validity(twoadd_I_from_m(m)).ok());
    }
  }
}

TEST(TwoAdditiveTest, MobiusValidityDetectsSumViolation) {
  const BiCapacity v = generate_random_2additive_bicapacity(3, 2);
  const GroundSet& gs = v.ground_set();
  std::vector<double> dense = bimobius(v.game()).dense();
  dense[gs.pair_index({SubsetMask(), gs.full()})] += 0.25;
  const MobiusRep m(SparseRep::from_dense(gs, IndexSpace::kPairs, dense));
  const ValidationReport r = check_mobius_validity(m);
  EXPECT_TRUE(r.has("mobius_origin"));
  EXPECT_TRUE(r.has("mobius_sum"));
}

TEST(TwoAdditiveTest, MobiusValidityDetectsLocalViolation) {
  const BiCapacity v = generate_random_2additive_bicapacity(4, 3);
  const GroundSet& gs = v.ground_set();
  std::vector<double> dense = bimobius(v.game()).dense();
  // A large negative m(i,(ij)^c) breaks (ii.1) at A = ∅, B = ∅.
  const SubsetMask ij = e(0) | e(1);
  dense[gs.pair_index({e(0), gs.full() - ij})] -= 5.0;
  const MobiusRep m(SparseRep::from_dense(gs, IndexSpace::kPairs, dense));
  const ValidationReport r = check_mobius_validity(m);
  EXPECT_TRUE(r.has("mobius_local_pos")) << r.summary();
  EXPECT_FALSE(check_interaction_validity(twoadd_I_from_m(m)).ok());
  EXPECT_FALSE(validate_bicapacity(BiCapacity(bi_zeta(m))).ok());
}

// The local conditions are exactly the marginal increments of v.
TEST(TwoAdditiveProperty, InteractionConditionsAreMarginals) {
  Gen gen(43);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const MobiusRep m = random_two_additive_mobius(gen, n);
      const BiGame v = bi_zeta(m);
      const InteractionRep in = twoadd_I_from_m(m);
      for (int i = 0; i < n; ++i) {
        const GroundSet sub_gs(n);
        for (const BiSetPair& ab : sub_gs.pairs()) {
          if (ab.pos.contains(i) || ab.neg.contains(i)) continue;
          EXPECT_NEAR(interaction_condition_pos(in, i, ab), v(ab.pos | e(i), ab.neg) - v(ab),
                      testing::kTol);
          EXPECT_NEAR(interaction_condition_neg(in, i, ab), v(ab) - v(ab.pos, ab.neg | e(i)),
                      testing::kTol);
        }
      }
    }
  }
}

TEST(TwoAdditiveProperty, ClosedFormsMatchDefinition) {
  Gen gen(44);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.integer(1, 6);
    const MobiusRep m = trial % 2 ? random_two_additive_mobius(gen, n)
                                  : bimobius(generate_random_2additive_bicapacity(n, trial).game());
    const BiGame v = bi_zeta(m);
    const InteractionRep in = twoadd_I_from_m(m);
    const Act f = trial % 3 ? gen.act(n, -2, 2) : gen.grid_act(n);
    const double expected = testing::def_bicap_oracle(v, f);
    EXPECT_NEAR(bicap_choquet_2additive(m, f), expected, testing::kTol);
    EXPECT_NEAR(bicap_choquet_2additive(in, f, InteractionForm::kPlain), expected, testing::kTol);
    EXPECT_NEAR(bicap_choquet_2additive(in, f, InteractionForm::kSigned), expected, testing::kTol);
  }
}

TEST(TwoAdditiveProperty, SignedCoefficientsAreNonnegative) {
  Gen gen(45);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 6);
    const InteractionRep in =
        twoadd_I_from_m(bimobius(generate_random_2additive_bicapacity(n, trial).game()));
    const Act f = gen.act(n);
    for (double c : signed_form_coefficients(in, f)) EXPECT_GE(c, -testing::kTol);
  }
}

TEST(TwoAdditiveProperty, PartialConvexitySumsAreOne) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const InteractionRep in =
        twoadd_I_from_m(bimobius(generate_random_2additive_bicapacity(n, seed).game()));
    const PartialConvexity pc = partial_convexity_sums(in);
    EXPECT_NEAR(pc.positive, 1.0, testing::kTol);
    EXPECT_NEAR(pc.negative, 1.0, testing::kTol);
  }
}

// The positive-side identity as it is usually printed, with
// -1/2 sum (I_{i,j} + |I_{ij,∅}|), misses the cross terms: it equals
// 1 - sum_{i != j} I_{i,j}, not 1.
TEST(TwoAdditiveObservation, PrintedPositiveConvexityIdentityDeviates) {
  double largest_gap = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const InteractionRep in =
        twoadd_I_from_m(bimobius(generate_random_2additive_bicapacity(n, seed).game()));
    double printed = 0;
    for (int i = 0; i < n; ++i) {
      double inner = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double pair = in({e(i) | e(j), SubsetMask()});
        inner += in({e(i), e(j)}) + std::abs(pair);
        if (i < j) printed += std::abs(pair);
      }
      printed += in({e(i), SubsetMask()}) - 0.5 * inner;
    }
    const Sums s = sums(in, n);
    EXPECT_NEAR(printed, 1.0 - s.ordered_cross, testing::kTol);
    largest_gap = std::max(largest_gap, std::abs(printed - 1.0));
  }
  EXPECT_GT(largest_gap, 1e-3);
}

}  // namespace
}  // namespace bicap
