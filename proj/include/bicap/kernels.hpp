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

// OpenMP-parallel table kernels. Each transform is a tensor product of a
// small per-criterion matrix, applied one criterion at a time (butterfly);
// the blocks of one pass are independent and are split across threads.
// The literal summation formulas live in reference.hpp and are used to test
// these kernels.

#ifndef BICAP_KERNELS_HPP
#define BICAP_KERNELS_HPP

#include <span>
#include <vector>

namespace bicap::kernels {

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int max_threads();

/// In place: t[A] <- sum_{B ⊆ A} t[B]. Table of size 2^n.
void subset_zeta(std::span<double> table, int n);
/// In place: t[A] <- sum_{B ⊆ A} (-1)^{|A\B|} t[B]. Inverse of subset_zeta.
void subset_mobius(std::span<double> table, int n);
/// In place: t[A] <- sum_{B ⊇ A} t[B] (upper zeta).
void superset_zeta(std::span<double> table, int n);

/// In place over Q(N) tabulated in base 3 (digit 0 free, 1 pos, 2 neg):
/// t(A,A') <- sum_{(B,B') ⊑ (A,A')} t(B,B').
void pair_zeta(std::span<double> table, int n);
/// In place inverse of pair_zeta: per criterion, pos <- pos - free,
/// free <- free - neg, neg unchanged.
void pair_mobius(std::span<double> table, int n);

/// out[A] = sum_{B ⊇ A} m[B] / (|B| - |A| + 1); the interaction index of a
/// game with Möbius transform m.
std::vector<double> interaction_from_mobius(std::span<const double> mobius, int n);

}  // namespace bicap::kernels

#endif  // BICAP_KERNELS_HPP
