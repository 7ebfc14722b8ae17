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

#include "bicap/errors.hpp"
#include "bicap/integrals.hpp"
#include "bicap/oracle.hpp"
#include "bicap/random.hpp"
#include "bicap/transforms.hpp"
#include "test_support.hpp"

namespace bicap {
namespace {

using testing::Gen;
using testing::max_abs_diff;

double factorial(int k) { return std::tgamma(k + 1.0); }

// I(A) summed from the finite differences with the factorial weights.
std::vector<double> interaction_oracle(const Game& g) {
  const GroundSet& gs = g.ground_set();
  const int n = gs.size();
  std::vector<double> out(gs.subset_count());
  for (std::uint32_t a = 0; a < gs.subset_count(); ++a) {
    const SubsetMask am(a);
    double s = 0;
    for_each_subset(gs.complement(am), [&](SubsetMask b) {
      double delta = 0;
      for_each_subset(am, [&](SubsetMask l) {
        delta += ((am.size() - l.size()) % 2 ? -1.0 : 1.0) * g(l | b);
      });
      s += factorial(n - b.size() - am.size()) * factorial(b.size()) /
           factorial(n - am.size() + 1) * delta;
    });
    out[a] = s;
  }
  return out;
}

// I_{S,T} summed from Delta_{S,T} with the factorial weights.
std::vector<double> bi_interaction_oracle(const BiGame& v) {
  const GroundSet& gs = v.ground_set();
  const int n = gs.size();
  std::vector<double> out(gs.pair_count());
  for (const BiSetPair& st : gs.pairs()) {
    const int s = st.pos.size();
    const int t = st.neg.size();
    double total = 0;
    for_each_subset(gs.complement(st.pos | st.neg), [&](SubsetMask k) {
      const SubsetMask l = gs.complement(k | st.pos);
      double delta = 0;
      for_each_subset(st.pos, [&](SubsetMask s1) {
        for_each_subset(st.neg, [&](SubsetMask t1) {
          const int sign = ((s - s1.size()) + (t - t1.size())) % 2 ? -1 : 1;
          delta += sign * v(k | s1, l - t1);
        });
      });
      total += factorial(n - s - t - k.size()) * factorial(k.size()) / factorial(n - s - t + 1) *
               delta;
    });
    out[gs.pair_index(st)] = total;
  }
  return out;
}

// I_{S,T} from the Möbius transform by filtering all of Q(N) x Q(N) with the
// interval predicate (S, N\(S∪T)) ⊑ (S',T') ⊑ (N\T, ∅).
std::vector<double> interval_filter_oracle(const std::vector<double>& m, const GroundSet& gs) {
  const int n = gs.size();
  const std::vector<BiSetPair> q = gs.pairs();
  std::vector<double> out(q.size(), 0.0);
  for (const BiSetPair& st : q) {
    const BiSetPair lo{st.pos, gs.complement(st.pos | st.neg)};
    const BiSetPair hi{gs.complement(st.neg), SubsetMask()};
    double total = 0;
    for (const BiSetPair& p : q) {
      if (precedes(lo, p) && precedes(p, hi)) {
        total += m[gs.pair_index(p)] / (n - st.pos.size() - st.neg.size() - p.neg.size() + 1);
      }
    }
    out[gs.pair_index(st)] = total;
  }
  return out;
}

TEST(SparseRepTest, LookupAndDense) {
  const GroundSet gs(2);
  const std::vector<double> dense{0, 0.5, 0, 0.5};
  const SparseRep rep = SparseRep::from_dense(gs, IndexSpace::kSubsets, dense);
  EXPECT_EQ(rep.entries().size(), 3u);  // the empty-set key is kept
  EXPECT_EQ(rep(SubsetMask::of({1})), 0.5);
  EXPECT_EQ(rep(SubsetMask::of({2})), 0.0);
  EXPECT_EQ(rep.dense(), dense);
  EXPECT_FALSE(rep.on_pairs());
}

TEST(TransformsTest, UnanimityGameHasSingleMobiusEntry) {
  const GroundSet gs(4);
  const SubsetMask t = SubsetMask::of({2, 4});
  const MobiusRep m = mobius(Game::unanimity(gs, t));
  for (std::uint32_t a = 0; a < 16; ++a) {
    EXPECT_EQ(m(SubsetMask(a)), SubsetMask(a) == t ? 1.0 : 0.0);
  }
  const BiSetPair ab{SubsetMask::of({1}), SubsetMask::of({3, 4})};
  const MobiusRep bm = bimobius(BiGame::unanimity(gs, ab));
  for (const BiSetPair& p : gs.pairs()) EXPECT_EQ(bm(p), p == ab ? 1.0 : 0.0);
}

TEST(TransformsTest, ZeroGame) {
  const GroundSet gs(3);
  EXPECT_EQ(zeta(MobiusRep(gs, IndexSpace::kSubsets)).values()[7], 0.0);
  const BiGame z = bi_zeta(MobiusRep(gs, IndexSpace::kPairs));
  for (double x : z.values()) EXPECT_EQ(x, 0.0);
}

TEST(TransformsProperty, MobiusZetaRoundTrip) {
  Gen gen(31);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Game g = gen.game(n);
      const Game back = zeta(mobius(g));
      for (std::size_t k = 0; k < g.values().size(); ++k) {
        EXPECT_NEAR(back.values()[k], g.values()[k], testing::kExact);
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const BiGame v = gen.bigame(n);
      const BiGame back = bi_zeta(bimobius(v));
      for (std::size_t k = 0; k < v.values().size(); ++k) {
        EXPECT_NEAR(back.values()[k], v.values()[k], testing::kExact);
      }
    }
  }
}

TEST(TransformsProperty, MobiusAgreesWithBackSubstitution) {
  Gen gen(32);
  for (int n = 1; n <= 5; ++n) {
    const Game g = gen.game(n);
    EXPECT_LT(max_abs_diff(mobius(g).dense(), oracle::mobius_solve_oracle(g).dense()), 1e-12);
    const BiGame v = gen.bigame(n);
    EXPECT_LT(max_abs_diff(bimobius(v).dense(), oracle::mobius_solve_oracle(v).dense()), 1e-12);
    EXPECT_LT(max_abs_diff(bimobius(v).dense(), testing::literal_bimobius(v)), 1e-12);
  }
}

TEST(TransformsProperty, ComobiusDefinition) {
  Gen gen(33);
  for (int n = 1; n <= 6; ++n) {
    const Game g = gen.game(n);
    const GroundSet& gs = g.ground_set();
    const CoMobiusRep cm = comobius(g);
    for (std::uint32_t a = 0; a < gs.subset_count(); ++a) {
      double s = 0;
      for (std::uint32_t b = 0; b < gs.subset_count(); ++b) {
        const SubsetMask bm(b);
        if (!gs.complement(SubsetMask(a)).is_subset_of(bm)) continue;
        s += ((n - bm.size()) % 2 ? -1.0 : 1.0) * g(bm);
      }
      EXPECT_NEAR(cm(SubsetMask(a)), s, 1e-12);
    }
  }
}

// Co-Möbius of the conjugate against the Möbius transform.
TEST(TransformsProperty, ConjugateComobiusIdentity) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Capacity c = generate_random_capacity(n, seed);
      const MobiusRep m = mobius(c);
      const CoMobiusRep cm = comobius(conjugate(c));
      for (std::uint32_t a = 1; a < c.ground_set().subset_count(); ++a) {
        const SubsetMask am(a);
        const double sign = (am.size() + 1) % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(cm(am), sign * m(am), testing::kTol);
      }
    }
  }
}

TEST(TransformsProperty, InteractionMatchesDefinition) {
  Gen gen(34);
  for (int n = 1; n <= 7; ++n) {
    const Game g = gen.game(n);
    const std::vector<double> expected = interaction_oracle(g);
    EXPECT_LT(max_abs_diff(interaction(g).dense(), expected), 1e-12) << n;
    EXPECT_LT(max_abs_diff(interaction_direct(g).dense(), expected), 1e-12) << n;
  }
}

TEST(TransformsProperty, ConjugateInteractionIdentity) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Capacity c = generate_random_capacity(n, seed);
      const InteractionRep i1 = interaction(c);
      const InteractionRep i2 = interaction(conjugate(c));
      for (std::uint32_t a = 1; a < c.ground_set().subset_count(); ++a) {
        const SubsetMask am(a);
        const double sign = (am.size() + 1) % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(i1(am), sign * i2(am), testing::kTol);
      }
    }
  }
}

TEST(TransformsProperty, ShapleyValuesSumToTop) {
  for (int n = 1; n <= 8; ++n) {
    const Capacity c = generate_random_capacity(n, n);
    const InteractionRep i = interaction(c);
    double s = 0;
    for (int k = 0; k < n; ++k) s += i(SubsetMask::singleton(k));
    EXPECT_NEAR(s, 1.0, testing::kTol);
  }
}

TEST(TransformsTest, Derivative) {
  Gen gen(35);
  const Game g = gen.game(4);
  const SubsetMask a = SubsetMask::of({1, 2});
  const SubsetMask k = SubsetMask::of({4});
  const double expected = g(SubsetMask::of({1, 2, 4})) - g(SubsetMask::of({1, 4})) -
                          g(SubsetMask::of({2, 4})) + g(SubsetMask::of({4}));
  EXPECT_NEAR(derivative(g, a, k), expected, 1e-15);
  EXPECT_THROW(derivative(g, a, SubsetMask::of({1})), PreconditionError);
  // Delta_A nu(∅) is the Möbius coefficient m(A).
  const MobiusRep m = mobius(g);
  for (std::uint32_t s = 0; s < 16; ++s) {
    EXPECT_NEAR(derivative(g, SubsetMask(s), SubsetMask()), m(SubsetMask(s)), 1e-12);
  }
}

TEST(TransformsTest, KAdditivity) {
  const GroundSet gs(4);
  EXPECT_TRUE(is_k_additive(mobius(Game::unanimity(gs, SubsetMask::of({1, 2}))), 2));
  EXPECT_FALSE(is_k_additive(mobius(Game::unanimity(gs, SubsetMask::of({1, 2, 3}))), 2));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(is_k_additive(mobius(generate_random_2additive_capacity(n, 1)), 2, 1e-12));
    // Interaction vanishes above pairs as well.
    const InteractionRep i = interaction(generate_random_2additive_capacity(n, 1));
    for (const auto& [key, value] : i.entries()) {
      if (std::popcount(key) > 2) {
        EXPECT_NEAR(value, 0.0, 1e-12);
      }
    }
  }
}

TEST(TransformsTest, PairKAdditivity) {
  const GroundSet gs(3);
  // u_(A,B) is k-additive iff |B| >= n - k.
  const MobiusRep m1 = bimobius(BiGame::unanimity(gs, {SubsetMask::of({1}), SubsetMask::of({2, 3})}));
  const MobiusRep m2 = bimobius(BiGame::unanimity(gs, {SubsetMask::of({1, 2}), SubsetMask()}));
  EXPECT_TRUE(is_k_additive_pairs(m1, 1));
  EXPECT_TRUE(is_two_additive(m1));
  EXPECT_FALSE(is_two_additive(m2));
  EXPECT_TRUE(is_k_additive_pairs(m2, 3));
}

// v expanded in the bi-unanimity basis.
TEST(TransformsProperty, BiUnanimityBasis) {
  Gen gen(36);
  for (int n = 1; n <= 4; ++n) {
    const BiGame v = gen.bigame(n);
    const MobiusRep m = bimobius(v);
    const GroundSet& gs = v.ground_set();
    std::vector<double> rebuilt(gs.pair_count(), 0.0);
    for (const BiSetPair& b : gs.pairs()) {
      const BiGame u = BiGame::unanimity(gs, b);
      for (std::size_t k = 0; k < rebuilt.size(); ++k) rebuilt[k] += m(b) * u.values()[k];
    }
    EXPECT_LT(max_abs_diff(rebuilt, std::vector<double>(v.values().begin(), v.values().end())),
              testing::kTol);
  }
}

TEST(TransformsTest, BiDerivative) {
  Gen gen(37);
  const BiGame v = gen.bigame(3);
  const BiSetPair st{SubsetMask::of({1}), SubsetMask::of({2})};
  const BiSetPair kl{SubsetMask(), SubsetMask::of({2, 3})};
  // Keeping 2 in L is the t' = 0 term, so it carries the odd sign.
  const double expected = v(SubsetMask(), SubsetMask::of({2, 3})) -
                          v(SubsetMask::of({1}), SubsetMask::of({2, 3})) -
                          v(SubsetMask(), SubsetMask::of({3})) +
                          v(SubsetMask::of({1}), SubsetMask::of({3}));
  EXPECT_NEAR(bi_derivative(v, st, kl), expected, 1e-15);
  EXPECT_THROW(bi_derivative(v, st, {SubsetMask(), SubsetMask::of({3})}), PreconditionError);
}

// The Möbius scatter, the literal difference formula and the filtered
// interval sum all agree.
TEST(TransformsProperty, BiInteractionThreeWays) {
  Gen gen(38);
  for (int n = 1; n <= 6; ++n) {
    const BiGame v = gen.bigame(n);
    const MobiusRep m = bimobius(v);
    const std::vector<double> fast = biinteraction(m).dense();
    EXPECT_LT(max_abs_diff(fast, biinteraction_direct(v).dense()), testing::kTol) << n;
    EXPECT_LT(max_abs_diff(fast, interval_filter_oracle(m.dense(), v.ground_set())), testing::kTol)
        << n;
    if (n <= 4) {
      EXPECT_LT(max_abs_diff(fast, bi_interaction_oracle(v)), testing::kTol) << n;
    }
  }
}

TEST(TransformsTest, BiInteractionDirectCap) {
  EXPECT_THROW(biinteraction_direct(BiGame::zero(GroundSet(kMaxDirectBiInteraction + 1))),
               CapacityLimitError);
}

// Not asserted: records how far the interaction of a 2-additive bi-capacity
// reaches beyond the |S|+|T| <= 2 index set.
TEST(TransformsObservation, TwoAdditiveInteractionSupport) {
  double outside = 0;
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const InteractionRep i = biinteraction(bimobius(generate_random_2additive_bicapacity(n, seed).game()));
      i.for_each_pair_entry([&](const BiSetPair& p, double x) {
        if (p.pos.size() + p.neg.size() > 2) outside = std::max(outside, std::abs(x));
      });
    }
  }
  RecordProperty("max_abs_interaction_outside_order2", std::to_string(outside));
  std::cout << "max |I_{S,T}| with |S|+|T| > 2 over 2-additive samples: " << outside << '\n';
}

}  // namespace
}  // namespace bicap
