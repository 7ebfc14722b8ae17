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

// JSON interchange. Subsets are sorted arrays of 1-based criteria; dense
// kinds must list every subset (or pair) exactly once, sparse kinds may omit
// zero entries.
//
//   {"kind":"capacity","n":3,"values":[{"set":[1,3],"v":0.7}, ...]}
//   {"kind":"bicapacity","n":3,"values":[{"pos":[2,3],"neg":[1],"v":0.4}, ...]}
//   {"kind":"bipolar","n":3,"values":[{"pos":[2],"neg":[],"vplus":0.3,"vminus":0}, ...]}
//   {"kind":"mobius"|"comobius"|"interaction","n":3,"values":[...]}
//   {"kind":"cpt","n":3,"plus":{capacity},"minus":{capacity}}
//   {"f":[-1,3,2]}

#ifndef BICAP_IO_HPP
#define BICAP_IO_HPP

#include <string>
#include <variant>

#include "json.hpp"

#include "bicap/act.hpp"
#include "bicap/integrals.hpp"
#include "bicap/set_function.hpp"
#include "bicap/transforms.hpp"

namespace bicap {

using Json = nlohmann::ordered_json;

using Model = std::variant<Capacity, BiCapacity, BipolarCapacity, MobiusRep, CoMobiusRep,
                           InteractionRep, CptModel>;

/// The "kind" tag of a model.
std::string model_kind(const Model& model);

/// Throw ParseError on malformed input.
Model model_from_json(const Json& json);
Act act_from_json(const Json& json);
Model load_model(const std::string& path);
Act load_act(const std::string& path);

Json to_json(const Capacity& c);
Json to_json(const BiCapacity& v);
Json to_json(const BipolarCapacity& z);
Json to_json(const MobiusRep& m);
Json to_json(const CoMobiusRep& m);
Json to_json(const InteractionRep& interaction);
Json to_json(const CptModel& model);
Json to_json(const Model& model);
Json to_json(const Act& f);

}  // namespace bicap

#endif  // BICAP_IO_HPP
