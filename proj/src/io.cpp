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

#include "bicap/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "bicap/errors.hpp"

namespace bicap {
namespace {

const Json& member(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return json.at(key);
}

double number(const Json& json, const char* key) {
  const Json& x = member(json, key);
  if (!x.is_number()) throw ParseError(std::string("\"") + key + "\" must be a number");
  return x.get<double>();
}

GroundSet ground_set_of(const Json& json) {
  const Json& n = member(json, "n");
  if (!n.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int size = n.get<int>();
  if (size < 1 || size > kMaxSubsetCriteria) throw ParseError("\"n\" out of range");
  return GroundSet(size);
}

bool normalized_flag(const Json& json) {
  if (!json.contains("normalized")) return false;
  if (!json.at("normalized").is_boolean()) throw ParseError("\"normalized\" must be a boolean");
  return json.at("normalized").get<bool>();
}

SubsetMask set_of(const Json& json, const char* key, const GroundSet& gs) {
  const Json& arr = member(json, key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::uint32_t bits = 0;
  for (const Json& x : arr) {
    if (!x.is_number_integer()) throw ParseError("criteria must be integers");
    const int c = x.get<int>();
    if (c < 1 || c > gs.size()) throw ParseError("criterion " + std::to_string(c) + " outside N");
    if ((bits >> (c - 1)) & 1u) throw ParseError("criterion listed twice");
    bits |= 1u << (c - 1);
  }
  return SubsetMask(bits);
}

Json set_json(SubsetMask a) { return Json(a.criteria()); }

const Json& values_of(const Json& json) {
  const Json& values = member(json, "values");
  if (!values.is_array()) throw ParseError("\"values\" must be an array");
  return values;
}

std::vector<double> dense_subsets(const Json& json, const GroundSet& gs) {
  std::vector<double> out(gs.subset_count(), 0.0);
  std::vector<bool> seen(out.size(), false);
  for (const Json& e : values_of(json)) {
    const SubsetMask a = set_of(e, "set", gs);
    if (seen[a.bits()]) throw ParseError("subset " + a.to_string() + " listed twice");
    seen[a.bits()] = true;
    out[a.bits()] = number(e, "v");
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) {
      throw ParseError("subset " + SubsetMask(static_cast<std::uint32_t>(k)).to_string() +
                       " missing");
    }
  }
  return out;
}

BiSetPair pair_of(const Json& e, const GroundSet& gs) {
  const BiSetPair p{set_of(e, "pos", gs), set_of(e, "neg", gs)};
  if (!p.is_disjoint()) throw ParseError("pair " + p.to_string() + " is not disjoint");
  return p;
}

// Reads a dense pair table; `keys` name the value field(s).
std::vector<std::vector<double>> dense_pairs(const Json& json, const GroundSet& gs,
                                             std::initializer_list<const char*> keys) {
  if (gs.size() > kMaxPairCriteria) throw ParseError("\"n\" too large for a pair table");
  std::vector<std::vector<double>> out(keys.size(), std::vector<double>(gs.pair_count(), 0.0));
  std::vector<bool> seen(gs.pair_count(), false);
  for (const Json& e : values_of(json)) {
    const BiSetPair p = pair_of(e, gs);
    const std::size_t k = gs.pair_index(p);
    if (seen[k]) throw ParseError("pair " + p.to_string() + " listed twice");
    seen[k] = true;
    std::size_t slot = 0;
    for (const char* key : keys) out[slot++][k] = number(e, key);
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw ParseError("pair " + gs.pair_at(k).to_string() + " missing");
  }
  return out;
}

SparseRep sparse_of(const Json& json, const GroundSet& gs) {
  const Json& values = values_of(json);
  if (values.empty()) throw ParseError("sparse representation needs at least one entry");
  const bool pairs = values.front().contains("pos");
  if (pairs && gs.size() > kMaxPairCriteria) throw ParseError("\"n\" too large for a pair table");
  std::map<std::size_t, double> entries;
  for (const Json& e : values) {
    std::size_t key;
    if (pairs) {
      key = gs.pair_index(pair_of(e, gs));
    } else {
      if (e.contains("pos")) throw ParseError("mixed subset and pair entries");
      key = set_of(e, "set", gs).bits();
    }
    if (!entries.emplace(key, number(e, "v")).second) throw ParseError("entry listed twice");
  }
  return SparseRep(gs, pairs ? IndexSpace::kPairs : IndexSpace::kSubsets, std::move(entries));
}

Json header(const char* kind, const GroundSet& gs, bool normalized) {
  Json j;
  j["kind"] = kind;
  j["n"] = gs.size();
  if (normalized) j["normalized"] = true;
  return j;
}

Json sparse_json(const char* kind, const SparseRep& rep) {
  Json j = header(kind, rep.ground_set(), false);
  Json values = Json::array();
  for (const auto& [key, value] : rep.entries()) {
    Json e;
    if (rep.on_pairs()) {
      const BiSetPair p = rep.ground_set().pair_at(key);
      e["pos"] = set_json(p.pos);
      e["neg"] = set_json(p.neg);
    } else {
      e["set"] = set_json(SubsetMask(static_cast<std::uint32_t>(key)));
    }
    e["v"] = value;
    values.push_back(std::move(e));
  }
  j["values"] = std::move(values);
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Capacity capacity_from_json(const Json& json) {
  const GroundSet gs = ground_set_of(json);
  return Capacity(Game(gs, dense_subsets(json, gs)), normalized_flag(json));
}

}  // namespace

std::string model_kind(const Model& model) {
  static const char* const kNames[] = {"capacity", "bicapacity", "bipolar", "mobius",
                                       "comobius", "interaction", "cpt"};
  return kNames[model.index()];
}

Model model_from_json(const Json& json) {
  const Json& kind_json = member(json, "kind");
  if (!kind_json.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "capacity") return capacity_from_json(json);
  const GroundSet gs = ground_set_of(json);
  if (kind == "bicapacity") {
    auto tables = dense_pairs(json, gs, {"v"});
    return BiCapacity(BiGame(gs, std::move(tables[0])), normalized_flag(json));
  }
  if (kind == "bipolar") {
    auto tables = dense_pairs(json, gs, {"vplus", "vminus"});
    return BipolarCapacity(BiGame(gs, std::move(tables[0])), BiGame(gs, std::move(tables[1])),
                           normalized_flag(json));
  }
  if (kind == "mobius") return MobiusRep(sparse_of(json, gs));
  if (kind == "interaction") return InteractionRep(sparse_of(json, gs));
  if (kind == "comobius") {
    SparseRep rep = sparse_of(json, gs);
    if (rep.on_pairs()) throw ParseError("co-Möbius representations live on subsets");
    return CoMobiusRep(std::move(rep));
  }
  if (kind == "cpt") {
    Capacity plus = capacity_from_json(member(json, "plus"));
    Capacity minus = capacity_from_json(member(json, "minus"));
    if (plus.ground_set() != gs || minus.ground_set() != gs) {
      throw ParseError("CPT parts must share \"n\"");
    }
    return CptModel(std::move(plus), std::move(minus));
  }
  throw ParseError("unknown kind \"" + kind + "\"");
}

Act act_from_json(const Json& json) {
  const Json& f = member(json, "f");
  if (!f.is_array() || f.empty()) throw ParseError("\"f\" must be a nonempty array");
  std::vector<double> values;
  for (const Json& x : f) {
    if (!x.is_number()) throw ParseError("act entries must be numbers");
    values.push_back(x.get<double>());
  }
  try {
    return Act(std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Model load_model(const std::string& path) { return model_from_json(read_file(path)); }
Act load_act(const std::string& path) { return act_from_json(read_file(path)); }

Json to_json(const Capacity& c) {
  const GroundSet& gs = c.ground_set();
  Json j = header("capacity", gs, c.normalized());
  Json values = Json::array();
  for (std::uint32_t a = 0; a < gs.subset_count(); ++a) {
    values.push_back({{"set", set_json(SubsetMask(a))}, {"v", c(SubsetMask(a))}});
  }
  j["values"] = std::move(values);
  return j;
}

Json to_json(const BiCapacity& v) {
  const GroundSet& gs = v.ground_set();
  Json j = header("bicapacity", gs, v.normalized());
  Json values = Json::array();
  for (std::size_t k = 0; k < gs.pair_count(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    values.push_back({{"pos", set_json(p.pos)}, {"neg", set_json(p.neg)}, {"v", v(p)}});
  }
  j["values"] = std::move(values);
  return j;
}

Json to_json(const BipolarCapacity& z) {
  const GroundSet& gs = z.ground_set();
  Json j = header("bipolar", gs, z.normalized());
  Json values = Json::array();
  for (std::size_t k = 0; k < gs.pair_count(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    values.push_back({{"pos", set_json(p.pos)},
                      {"neg", set_json(p.neg)},
                      {"vplus", z.plus(p)},
                      {"vminus", z.minus(p)}});
  }
  j["values"] = std::move(values);
  return j;
}

Json to_json(const MobiusRep& m) { return sparse_json("mobius", m); }
Json to_json(const CoMobiusRep& m) { return sparse_json("comobius", m); }
Json to_json(const InteractionRep& interaction) { return sparse_json("interaction", interaction); }

Json to_json(const CptModel& model) {
  Json j = header("cpt", model.ground_set(), false);
  j["plus"] = to_json(model.plus());
  j["minus"] = to_json(model.minus());
  return j;
}

Json to_json(const Model& model) {
  return std::visit([](const auto& x) { return to_json(x); }, model);
}

Json to_json(const Act& f) {
  return Json{{"f", std::vector<double>(f.values().begin(), f.values().end())}};
}

}  // namespace bicap
