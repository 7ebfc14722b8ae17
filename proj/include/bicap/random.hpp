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

// Seeded instance generators. Outputs are deterministic in (n, seed) and pass
// the matching validator at tol = 0. They are not uniform over the polytopes.

#ifndef BICAP_RANDOM_HPP
#define BICAP_RANDOM_HPP

#include <cstdint>

#include "bicap/act.hpp"
#include "bicap/set_function.hpp"

namespace bicap {

/// Normalized capacity: uniform draws, monotone repair, rescale to nu(N) = 1.
Capacity generate_random_capacity(int n, std::uint64_t seed);

/// Normalized bi-capacity: uniform draws, repair along ⊑, piecewise affine
/// rescale hitting v(∅,N) = -1, v(∅,∅) = 0, v(N,∅) = 1.
BiCapacity generate_random_bicapacity(int n, std::uint64_t seed);

/// Normalized bipolar capacity (generally violating the unambiguity
/// condition).
BipolarCapacity generate_random_bipolar(int n, std::uint64_t seed);

/// Normalized 2-additive bi-capacity: the Möbius transform is drawn on the
/// order-2 support with every monotonicity inequality strictly satisfied.
BiCapacity generate_random_2additive_bicapacity(int n, std::uint64_t seed);

/// Normalized 2-additive capacity (Möbius support on singletons and pairs).
Capacity generate_random_2additive_capacity(int n, std::uint64_t seed);

/// Uniform act in [lo, hi]^n.
Act generate_random_act(int n, std::uint64_t seed, double lo = -1.0, double hi = 1.0);

/// Act whose entries are drawn from a small grid so that ties in |f| (also
/// across signs) and zeros are frequent.
Act generate_tied_act(int n, std::uint64_t seed);

}  // namespace bicap

#endif  // BICAP_RANDOM_HPP
