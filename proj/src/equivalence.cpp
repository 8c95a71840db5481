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

#include "comer/equivalence.hpp"

#include <array>
#include <deque>
#include <string>

#include "comer/error.hpp"

namespace comer {

Cycle shift_cycle(unsigned n, Cycle cycle, unsigned i) {
  i %= n;
  return {(cycle.a + i) % n, (cycle.b + i) % n, (cycle.c + i) % n};
}

Cycle normalize(unsigned n, Cycle cycle) {
  return shift_cycle(n, cycle, (n - cycle.a % n) % n);
}

Cycle involution_image(unsigned n, Cycle cycle) {
  if (n % 2 != 0) {
    throw Error(ErrorKind::NotAsymmetric,
                "involution needs an even coset count, got n = " +
                    std::to_string(n));
  }
  const Cycle c = normalize(n, cycle);
  const unsigned m = n / 2;
  return {0, (c.c + m) % n, (c.b + m) % n};
}

CycleOrbit orbit(const Parameters& params, Cycle cycle) {
  const unsigned n = params.n;
  const Cycle start = normalize(n, cycle);

  CycleOrbit result{{start}, start};
  std::deque<Cycle> frontier{start};
  auto visit = [&](Cycle c) {
    c = normalize(n, c);
    if (result.members.insert(c).second) frontier.push_back(c);
  };

  while (!frontier.empty()) {
    const Cycle c = frontier.front();
    frontier.pop_front();
    visit({c.b, c.a, c.c});
    if (params.symmetric) {
      const std::array<Cycle, 4> perms{{
          {c.a, c.c, c.b},
          {c.c, c.a, c.b},
          {c.c, c.b, c.a},
          {c.b, c.c, c.a},
      }};
      for (const Cycle& q : perms) visit(q);
    } else {
      visit(involution_image(n, c));
    }
  }
  result.canon = *result.members.begin();
  return result;
}

std::set<Cycle> canonical_forbidden_set(const CycleStructure& structure) {
  std::set<Cycle> seen;
  std::set<Cycle> canon;
  for (const Cycle& c : structure.cycles_with(Status::Forbidden, false)) {
    if (seen.contains(c)) continue;
    CycleOrbit o = orbit(structure.params(), c);
    canon.insert(o.canon);
    seen.merge(o.members);
  }
  return canon;
}

bool is_ramsey(const CycleStructure& structure) {
  const auto forbidden = structure.cycles_with(Status::Forbidden, true);
  return forbidden.size() == 1 && forbidden.front() == Cycle{0, 0, 0};
}

bool is_all_flexible(const CycleStructure& structure) {
  for (unsigned i = 0; i < structure.n(); ++i) {
    for (unsigned j = 0; j < structure.n(); ++j) {
      if (structure.is_forbidden(i, j)) return false;
    }
  }
  return true;
}

}  // namespace comer
