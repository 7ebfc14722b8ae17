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

#ifndef BICAP_VALIDATION_HPP
#define BICAP_VALIDATION_HPP

#include <string>
#include <vector>

#include "bicap/set_function.hpp"

namespace bicap {

inline constexpr double kDefaultTolerance = 1e-9;

struct Violation {
  std::string kind;   ///< short machine-friendly tag, e.g. "monotonicity"
  std::string where;  ///< the offending sets, in 1-based notation
  double amount = 0;  ///< size of the violation (always >= 0)
};

/// Report-carrying result of a validator. Validators never throw on invalid
/// input; they list every violated condition.
struct ValidationReport {
  std::vector<Violation> violations;
  /// Largest |lhs - rhs| seen over the identities that were checked.
  double max_residual = 0;
  /// Whether the normalization conditions hold (independently of the flag).
  bool normalized = false;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
  void add(std::string kind, std::string where, double amount);
  /// Tracks |residual| in max_residual and records a violation if > tol.
  void check_equal(const std::string& kind, const std::string& where, double lhs,
                   double rhs, double tol);
  /// One line per violation, or "ok".
  std::string summary() const;
};

ValidationReport validate_capacity(const Capacity& c, double tol = kDefaultTolerance);
ValidationReport validate_bicapacity(const BiCapacity& v, double tol = kDefaultTolerance);
ValidationReport validate_bipolar(const BipolarCapacity& z, double tol = kDefaultTolerance);

}  // namespace bicap

#endif  // BICAP_VALIDATION_HPP
