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

// Serial, literal evaluations of the transform formulas. They are quadratic
// or worse in the table size and exist to test and benchmark the kernels.

#ifndef BICAP_REFERENCE_HPP
#define BICAP_REFERENCE_HPP

#include <span>
#include <vector>

namespace bicap::reference {

/// m(A) = sum_{B ⊆ A} (-1)^{|A|-|B|} nu(B), over a table of size 2^n.
std::vector<double> subset_mobius(std::span<const double> game, int n);
/// nu(A) = sum_{B ⊆ A} m(B).
std::vector<double> subset_zeta(std::span<const double> mobius, int n);
/// m(A,A') = sum_{B ⊆ A, A' ⊆ B' ⊆ A^c} (-1)^{|A\B|+|B'\A'|} v(B,B'), base-3 tables.
std::vector<double> pair_mobius(std::span<const double> bigame, int n);
/// v(A,A') = sum_{(B,B') ⊑ (A,A')} m(B,B').
std::vector<double> pair_zeta(std::span<const double> mobius, int n);
/// I(A) = sum_{B ⊇ A} m(B) / (|B|-|A|+1).
std::vector<double> interaction_from_mobius(std::span<const double> mobius, int n);

}  // namespace bicap::reference

#endif  // BICAP_REFERENCE_HPP
