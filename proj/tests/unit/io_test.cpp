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

#include <gtest/gtest.h>

#include "bicap/errors.hpp"
#include "bicap/io.hpp"
#include "bicap/random.hpp"
#include "bicap/transforms.hpp"
#include "test_support.hpp"

namespace bicap {
namespace {

template <typename T>
T reparse(const T& x) {
  const Model m = model_from_json(Json::parse(to_json(x).dump()));
  EXPECT_TRUE(std::holds_alternative<T>(m)) << model_kind(m);
  return std::get<T>(m);
}

void expect_same_values(std::span<const double> a, std::span<const double> b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
}

TEST(IoTest, DenseKindsRoundTrip) {
  const Capacity c = generate_random_capacity(4, 1);
  const Capacity c2 = reparse(c);
  expect_same_values(c.values(), c2.values());
  EXPECT_TRUE(c2.normalized());

  const BiCapacity v = generate_random_bicapacity(3, 2);
  expect_same_values(v.values(), reparse(v).values());

  const BipolarCapacity z = generate_random_bipolar(3, 3);
  const BipolarCapacity z2 = reparse(z);
  expect_same_values(z.plus().values(), z2.plus().values());
  expect_same_values(z.minus().values(), z2.minus().values());

  const CptModel cpt_model(generate_random_capacity(3, 4), generate_random_capacity(3, 5));
  const CptModel cpt2 = reparse(cpt_model);
  expect_same_values(cpt_model.minus().values(), cpt2.minus().values());
}

TEST(IoTest, SparseKindsRoundTrip) {
  const MobiusRep m = mobius(generate_random_capacity(3, 1));
  EXPECT_EQ(reparse(m).dense(), m.dense());
  const MobiusRep bm = bimobius(generate_random_bicapacity(3, 1).game());
  const MobiusRep bm2 = reparse(bm);
  EXPECT_TRUE(bm2.on_pairs());
  EXPECT_EQ(bm2.dense(), bm.dense());
  const InteractionRep in = biinteraction(bm);
  EXPECT_EQ(reparse(in).dense(), in.dense());
  const CoMobiusRep cm = comobius(generate_random_capacity(3, 1));
  EXPECT_EQ(reparse(cm).dense(), cm.dense());
}

// An all-zero sparse table still carries its family through the empty entry.
TEST(IoTest, ZeroSparseTableKeepsFamily) {
  const MobiusRep zero = bimobius(BiGame::zero(GroundSet(2)));
  EXPECT_TRUE(reparse(zero).on_pairs());
  const MobiusRep zero_subsets = mobius(Game::zero(GroundSet(2)));
  EXPECT_FALSE(reparse(zero_subsets).on_pairs());
}

TEST(IoTest, HandWrittenModel) {
  const Json j = Json::parse(R"({"kind":"capacity","n":2,"values":[
      {"set":[],"v":0},{"set":[1],"v":0.25},{"set":[2],"v":0.5},{"set":[1,2],"v":1}]})");
  const Capacity c = std::get<Capacity>(model_from_json(j));
  EXPECT_EQ(c(SubsetMask::of({2})), 0.5);
  EXPECT_FALSE(c.normalized());
  const Act f = act_from_json(Json::parse(R"({"f":[-1, 3, 2.5]})"));
  EXPECT_EQ(f.size(), 3);
  EXPECT_EQ(f[2], 2.5);
}

TEST(IoTest, MalformedInputs) {
  const char* bad[] = {
      R"([1,2])",
      R"({"n":1,"values":[]})",
      R"({"kind":"nope","n":1,"values":[]})",
      R"({"kind":"capacity","n":0,"values":[]})",
      R"({"kind":"capacity","n":1.5,"values":[]})",
      R"({"kind":"capacity","n":1,"values":[{"set":[],"v":0}]})",
      R"({"kind":"capacity","n":1,"values":[{"set":[],"v":0},{"set":[1],"v":1},{"set":[1],"v":1}]})",
      R"({"kind":"capacity","n":1,"values":[{"set":[],"v":0},{"set":[2],"v":1}]})",
      R"({"kind":"capacity","n":1,"values":[{"set":[],"v":0},{"set":[1],"v":"x"}]})",
      R"({"kind":"capacity","n":1,"normalized":1,"values":[{"set":[],"v":0},{"set":[1],"v":1}]})",
      R"({"kind":"bicapacity","n":1,"values":[{"pos":[1],"neg":[1],"v":0}]})",
      R"({"kind":"mobius","n":2,"values":[]})",
      R"({"kind":"mobius","n":2,"values":[{"set":[],"v":0},{"pos":[1],"neg":[],"v":1}]})",
      R"({"kind":"comobius","n":1,"values":[{"pos":[],"neg":[],"v":0}]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(model_from_json(Json::parse(text)), ParseError) << text;
  }
  EXPECT_THROW(act_from_json(Json::parse(R"({"f":[]})")), ParseError);
  EXPECT_THROW(act_from_json(Json::parse(R"({"f":["a"]})")), ParseError);
  EXPECT_THROW(act_from_json(Json::parse(R"({"g":[1]})")), ParseError);
  EXPECT_THROW(load_model("/nonexistent/model.json"), ParseError);
}

TEST(IoTest, CheckedInFixturesLoad) {
  const std::string dir = BICAP_FIXTURE_DIR;
  EXPECT_EQ(model_kind(load_model(dir + "/bicapacity.json")), "bicapacity");
  EXPECT_EQ(model_kind(load_model(dir + "/bipolar.json")), "bipolar");
  EXPECT_EQ(model_kind(load_model(dir + "/mobius.json")), "mobius");
  const Act f = load_act(dir + "/act.json");
  EXPECT_EQ(f[0], -1.0);
  EXPECT_EQ(f[1], 3.0);
  EXPECT_EQ(f[2], 2.0);
}

}  // namespace
}  // namespace bicap
