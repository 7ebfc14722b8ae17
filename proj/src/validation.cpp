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

#include "bicap/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bicap {

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

void ValidationReport::add(std::string kind, std::string where, double amount) {
  violations.push_back(Violation{std::move(kind), std::move(where), amount});
}

void ValidationReport::check_equal(const std::string& kind, const std::string& where,
                                   double lhs, double rhs, double tol) {
  const double residual = std::abs(lhs - rhs);
  max_residual = std::max(max_residual, residual);
  if (residual > tol) add(kind, where, residual);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out.precision(6);
  for (const Violation& v : violations) {
    out << v.kind << ' ' << v.where << ' ' << v.amount << '\n';
  }
  std::string s = out.str();
  s.pop_back();
  return s;
}

ValidationReport validate_capacity(const Capacity& c, double tol) {
  ValidationReport report;
  const GroundSet& gs = c.ground_set();
  const double empty = c(SubsetMask());
  if (std::abs(empty) > tol) report.add("empty_set", "nu({}) != 0", std::abs(empty));

  for (std::uint32_t a = 0; a < gs.subset_count(); ++a) {
    const SubsetMask set(a);
    for (int i = 0; i < gs.size(); ++i) {
      if (set.contains(i)) continue;
      const SubsetMask larger = set | SubsetMask::singleton(i);
      const double drop = c(set) - c(larger);
      if (drop > tol) {
        report.add("monotonicity", set.to_string() + " > " + larger.to_string(), drop);
      }
    }
  }

  const double top = c(gs.full());
  report.normalized = std::abs(top - 1.0) <= tol && std::abs(empty) <= tol;
  if (c.normalized() && std::abs(top - 1.0) > tol) {
    report.add("normalization", "nu(N) != 1", std::abs(top - 1.0));
  }
  return report;
}

ValidationReport validate_bicapacity(const BiCapacity& v, double tol) {
  ValidationReport report;
  const GroundSet& gs = v.ground_set();
  gs.require_pair_tabulation();
  const double origin = v(SubsetMask(), SubsetMask());
  if (std::abs(origin) > tol) report.add("empty_pair", "v({},{}) != 0", std::abs(origin));

  // Covering relations of ⊑: add a free criterion to A, or drop one from B.
  for (std::size_t k = 0; k < gs.pair_count(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    const double here = v(p);
    for (int i = 0; i < gs.size(); ++i) {
      BiSetPair up = p;
      if (p.neg.contains(i)) {
        up.neg = p.neg - SubsetMask::singleton(i);
      } else if (!p.pos.contains(i)) {
        up.pos = p.pos | SubsetMask::singleton(i);
      } else {
        continue;
      }
      const double drop = here - v(up);
      if (drop > tol) report.add("isotonicity", p.to_string() + " > " + up.to_string(), drop);
    }
  }

  const double top = v(gs.full(), SubsetMask());
  const double bottom = v(SubsetMask(), gs.full());
  report.normalized = std::abs(top - 1.0) <= tol && std::abs(bottom + 1.0) <= tol &&
                      std::abs(origin) <= tol;
  if (v.normalized()) {
    if (std::abs(top - 1.0) > tol) report.add("normalization", "v(N,{}) != 1", std::abs(top - 1.0));
    if (std::abs(bottom + 1.0) > tol) {
      report.add("normalization", "v({},N) != -1", std::abs(bottom + 1.0));
    }
  }
  return report;
}

ValidationReport validate_bipolar(const BipolarCapacity& z, double tol) {
  ValidationReport report;
  const GroundSet& gs = z.ground_set();
  gs.require_pair_tabulation();
  for (std::size_t k = 0; k < gs.pair_count(); ++k) {
    const BiSetPair p = gs.pair_at(k);
    const double zp = z.plus(p);
    const double zm = z.minus(p);
    if (zp < -tol || zp > 1 + tol) {
      report.add("range", "zeta+" + p.to_string(), zp < 0 ? -zp : zp - 1);
    }
    if (zm < -tol || zm > 1 + tol) {
      report.add("range", "zeta-" + p.to_string(), zm < 0 ? -zm : zm - 1);
    }
    if (p.pos.empty() && std::abs(zp) > tol) {
      report.add("plus_empty", "zeta+" + p.to_string() + " != 0", std::abs(zp));
    }
    if (p.neg.empty() && std::abs(zm) > tol) {
      report.add("minus_empty", "zeta-" + p.to_string() + " != 0", std::abs(zm));
    }
    for (int i = 0; i < gs.size(); ++i) {
      BiSetPair up = p;
      if (p.neg.contains(i)) {
        up.neg = p.neg - SubsetMask::singleton(i);
      } else if (!p.pos.contains(i)) {
        up.pos = p.pos | SubsetMask::singleton(i);
      } else {
        continue;
      }
      // zeta+ grows and zeta- shrinks when moving up in ⊑.
      const double plus_drop = zp - z.plus(up);
      if (plus_drop > tol) {
        report.add("plus_monotonicity", p.to_string() + " > " + up.to_string(), plus_drop);
      }
      const double minus_rise = z.minus(up) - zm;
      if (minus_rise > tol) {
        report.add("minus_monotonicity", p.to_string() + " < " + up.to_string(), minus_rise);
      }
    }
  }

  const BiSetPair top{gs.full(), SubsetMask()};
  const BiSetPair bottom{SubsetMask(), gs.full()};
  const double err = std::max({std::abs(z.plus(top) - 1.0), std::abs(z.minus(top)),
                               std::abs(z.plus(bottom)), std::abs(z.minus(bottom) - 1.0)});
  report.normalized = err <= tol;
  if (z.normalized() && err > tol) {
    report.add("normalization", "zeta(N,{}) != (1,0) or zeta({},N) != (0,1)", err);
  }
  return report;
}

}  // namespace bicap
