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

// Brute-force references used to check the closed forms. Nothing here calls
// the production integral or transform paths it is compared against.

#ifndef BICAP_ORACLE_HPP
#define BICAP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bicap/act.hpp"
#include "bicap/io.hpp"
#include "bicap/set_function.hpp"
#include "bicap/transforms.hpp"

namespace bicap::oracle {

inline constexpr int kOracleHardCap = 8;

struct OracleConfig {
  int n_max = 6;  ///< largest ground set the oracles accept; at most 8
  int samples = 200;
  std::uint64_t seed = 20260101;
  double tol = 1e-9;
  double exact_tol = 1e-12;
  /// Directory that receives failing instances; empty disables dumping.
  std::string dump_dir;

  /// Throws PreconditionError if n_max exceeds the hard cap.
  void validate() const;
};

/// Integral of nu({i : f_i >= alpha}) over alpha >= 0, summed exactly over the
/// distinct values of f. Requires f >= 0.
double choquet_levelset_oracle(const Game& game, const Act& f);

/// Möbius transform by back-substitution through the zeta system, in an order
/// where every set (pair) follows all of its predecessors. n <= n_max.
MobiusRep mobius_solve_oracle(const Game& game, const OracleConfig& config = {});
MobiusRep mobius_solve_oracle(const BiGame& v, const OracleConfig& config = {});

/// Every distinct value (within exact_tol) taken by the bipolar Choquet sum
/// over all permutations ordering |f| nondecreasingly. Sorted.
std::vector<double> exhaustive_permutation_oracle(const BipolarCapacity& z, const Act& f,
                                                  const OracleConfig& config = {});

/// Number of permutations ordering |f| nondecreasingly.
std::uint64_t admissible_permutation_count(const Act& f);

/// f_i * g_i >= 0 for every i.
bool is_cosigned(const Act& f, const Act& g);
/// (f_i - f_j)(g_i - g_j) >= 0 for every i, j.
bool is_comonotone(const Act& f, const Act& g);

/// Cosigned pair with comonotone |f|, |g|; all entries nonzero.
std::pair<Act, Act> make_cosigned_comonotone_pair(int n, std::uint64_t seed);
/// Comonotone pair of arbitrary signs.
std::pair<Act, Act> make_comonotone_pair(int n, std::uint64_t seed);

/// Compares two numbers; on disagreement beyond tol, writes the instance to
/// <dump_dir>/<name>.json (when configured) and returns false.
bool agree_or_dump(const OracleConfig& config, const std::string& name, double lhs, double rhs,
                   double tol, const std::function<Json()>& instance);

}  // namespace bicap::oracle

#endif  // BICAP_ORACLE_HPP
