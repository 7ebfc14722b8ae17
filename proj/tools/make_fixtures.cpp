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

// Regenerates the checked-in CLI fixtures: three n = 3 models, the act
// (-1, 3, 2), and the expected values obtained from hand expansions of the
// integral for that act (not from the integral code).
//
// Usage: make_fixtures OUTPUT_DIR

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "bicap/integrals.hpp"
#include "bicap/io.hpp"
#include "bicap/random.hpp"
#include "bicap/transforms.hpp"

namespace {

using namespace bicap;

BiSetPair pr(std::initializer_list<int> a, std::initializer_list<int> b) {
  return {SubsetMask::of(a), SubsetMask::of(b)};
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string line(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g\n", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures OUTPUT_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];

  const Act f{-1.0, 3.0, 2.0};
  write(dir + "/act.json", to_json(f).dump(1) + "\n");

  const BiCapacity v = generate_random_bicapacity(3, 101);
  write(dir + "/bicapacity.json", to_json(v).dump(1) + "\n");
  write(dir + "/bicapacity.expected",
        line(v(pr({2, 3}, {1})) + v(pr({2, 3}, {})) + v(pr({2}, {}))));

  const BipolarCapacity z = generate_random_bipolar(3, 202);
  write(dir + "/bipolar.json", to_json(z).dump(1) + "\n");
  const double plus = 2 * z.plus(pr({2, 3}, {})) + z.plus(pr({2}, {}));
  const double minus = z.minus(pr({2, 3}, {1})) - z.minus(pr({2, 3}, {}));
  write(dir + "/bipolar.expected", line(plus - minus) + line(plus) + line(minus));

  const MobiusRep m = bimobius(generate_random_bicapacity(3, 303).game());
  write(dir + "/mobius.json", to_json(m).dump(1) + "\n");
  const double expansion =
      -(m(pr({}, {})) + m(pr({}, {2})) + m(pr({}, {3})) + m(pr({}, {2, 3}))) +
      2 * (m(pr({2}, {})) + m(pr({2}, {3}))) + m(pr({3}, {})) + m(pr({3}, {2})) +
      m(pr({2, 3}, {})) + 3 * (m(pr({2}, {1})) + m(pr({2}, {1, 3}))) +
      2 * (m(pr({3}, {1})) + m(pr({3}, {1, 2})) + m(pr({2, 3}, {1})));
  write(dir + "/mobius.expected", line(expansion));

  // Extra models for the exit-code tests.
  const BiCapacity two = generate_random_2additive_bicapacity(3, 404);
  write(dir + "/twoadd_mobius.json", to_json(bimobius(two.game())).dump(1) + "\n");
  std::vector<double> broken(v.values().begin(), v.values().end());
  broken[v.ground_set().pair_index(pr({1}, {}))] = 2.0;
  write(dir + "/invalid_bicapacity.json",
        to_json(BiCapacity(BiGame(v.ground_set(), broken), true)).dump(1) + "\n");
  return 0;
}
