// Copyright 2026 The comer-cycles Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <set>

#include "comer/cosets.hpp"
#include "comer/cycles.hpp"

namespace comer {

/// (a + i, b + i, c + i) mod n. Status-preserving: multiplying every coset
/// by g^i permutes them cyclically.
Cycle shift_cycle(unsigned n, Cycle cycle, unsigned i);

/// Shifts so that the leading index is 0.
Cycle normalize(unsigned n, Cycle cycle);

/// (0, i, j) -> (0, j + m, i + m) with m = n / 2. Throws Error(NotAsymmetric)
/// for odd n. The input is normalized first.
Cycle involution_image(unsigned n, Cycle cycle);

struct CycleOrbit {
  std::set<Cycle> members;
  Cycle canon;

  bool contains(const Cycle& c) const { return members.contains(c); }
};

/// Closure of a normalized cycle under the status-preserving moves:
///   - shifts (every member is kept in leading-0 form),
///   - swapping the two summands, since X_a + X_b = X_b + X_a,
///   - any permutation of (a, b, c) when k is even: x + y = z gives
///     z + (-y) = x and -y lies in the same coset as y,
///   - the involution when k is odd, from -X_i = X_{i+m}.
CycleOrbit orbit(const Parameters& params, Cycle cycle);

/// One lexicographically least representative per orbit of forbidden cycles.
std::set<Cycle> canonical_forbidden_set(const CycleStructure& structure);

/// Forbidden cycles with x <= y are exactly {(0, 0, 0)}: only the monochrome
/// triangles are forbidden.
bool is_ramsey(const CycleStructure& structure);

/// No diversity cycle is forbidden.
bool is_all_flexible(const CycleStructure& structure);

}  // namespace comer
