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

#include <algorithm>
#include <array>
#include <random>

#include <gtest/gtest.h>

#include "comer/error.hpp"
#include "oracle.hpp"

namespace comer {
namespace {

CycleStructure structure(std::int64_t p, std::int64_t n) {
  return classify(CosetTable(make_parameters(p, n)));
}

template <class Fn>
void for_each_instance(std::int64_t p_max, unsigned n_max, Fn fn) {
  const auto prime = testing::sieve(p_max);
  for (std::int64_t p = 3; p <= p_max; ++p) {
    if (!prime[p]) continue;
    for (unsigned n = 1; n < p && n <= n_max; ++n) {
      if ((p - 1) % n == 0) fn(make_parameters(p, n));
    }
  }
}

TEST(ShiftCycle, Examples) {
  EXPECT_EQ(shift_cycle(7, {0, 0, 4}, 3), (Cycle{3, 3, 0}));
  EXPECT_EQ(shift_cycle(7, {0, 3, 3}, 0), (Cycle{0, 3, 3}));
  EXPECT_EQ(shift_cycle(10, {0, 7, 6}, 3), (Cycle{3, 0, 9}));
}

TEST(ShiftCycle, InverseShiftRestores) {
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned b = 0; b < n; ++b) {
        const Cycle c{0, b, (b * 7 + 3) % n};
        ASSERT_EQ(shift_cycle(n, shift_cycle(n, c, i), n - i), c);
      }
    }
  }
}

// The shift preserves status: checked against the full-grid brute force.
TEST(ShiftCycle, PreservesStatusOnBruteForce) {
  for (auto [p, n] : {std::pair{113u, 7u}, {71u, 10u}, {13u, 4u}, {61u, 6u}}) {
    const auto g = make_parameters(p, n).g;
    const auto cosets = testing::brute_cosets(p, n, g);
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned c = 0; c < n; ++c) {
        const bool base = testing::brute_forbidden(cosets, p, 0, b, c);
        for (unsigned i = 0; i < n; ++i) {
          const Cycle s = shift_cycle(n, {0, b, c}, i);
          ASSERT_EQ(testing::brute_forbidden(cosets, p, s.a, s.b, s.c), base);
        }
      }
    }
  }
}

TEST(Involution, Examples) {
  EXPECT_EQ(involution_image(10, {0, 1, 2}), (Cycle{0, 7, 6}));
  EXPECT_EQ(involution_image(10, {0, 2, 7}), (Cycle{0, 2, 7}));
  EXPECT_EQ(involution_image(6, {0, 1, 3}), (Cycle{0, 0, 4}));
}

TEST(Involution, RejectsOddN) {
  try {
    involution_image(7, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAsymmetric);
  }
}

TEST(Involution, SquaresToIdentityAndFixesAntipodes) {
  for (unsigned n = 2; n <= 30; n += 2) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        const Cycle c{0, i, j};
        ASSERT_EQ(involution_image(n, involution_image(n, c)), c);
        const bool fixed = involution_image(n, c) == c;
        ASSERT_EQ(fixed, j == (i + n / 2) % n);
      }
    }
  }
}

TEST(Orbit, SymmetricExample) {
  const CycleOrbit o = orbit(make_parameters(113, 7), {0, 3, 3});
  EXPECT_TRUE(o.contains({0, 0, 4}));
  EXPECT_TRUE(o.contains({0, 3, 3}));
  EXPECT_EQ(o.canon, (Cycle{0, 0, 4}));
}

TEST(Orbit, AsymmetricExample) {
  const CycleOrbit o = orbit(make_parameters(71, 10), {0, 1, 2});
  EXPECT_TRUE(o.contains({0, 7, 6}));
  EXPECT_TRUE(o.contains({0, 3, 9}));
}

TEST(Orbit, MonochromeFixedPoint) {
  const CycleOrbit o = orbit(make_parameters(5, 2), {0, 0, 0});
  EXPECT_EQ(o.members, (std::set<Cycle>{{0, 0, 0}}));
  EXPECT_EQ(o.canon, (Cycle{0, 0, 0}));
}

TEST(Orbit, MembersAreNormalizedAndBounded) {
  for_each_instance(300, 30, [](const Parameters& pr) {
    for (unsigned b = 0; b < pr.n; ++b) {
      const CycleOrbit o = orbit(pr, {0, b, (3 * b + 1) % pr.n});
      ASSERT_LE(o.members.size(), 6u * pr.n);
      ASSERT_EQ(o.canon, *o.members.begin());
      for (const Cycle& c : o.members) {
        ASSERT_EQ(c.a, 0u);
        ASSERT_LT(c.b, pr.n);
        ASSERT_LT(c.c, pr.n);
      }
    }
  });
}

// Status is constant on every orbit, judged by the naive oracle.
TEST(Orbit, StatusIsConstant) {
  for_each_instance(500, 24, [](const Parameters& pr) {
    const CosetTable t(pr);
    const auto s = classify_naive(t);
    for (unsigned i = 0; i < pr.n; ++i) {
      for (unsigned j = 0; j < pr.n; ++j) {
        for (const Cycle& c : orbit(pr, {0, i, j}).members) {
          ASSERT_EQ(s.at(c.b, c.c), s.at(i, j))
              << "p=" << pr.p.value() << " n=" << pr.n << " (0," << i << "," << j << ")";
        }
      }
    }
  });
}

TEST(Orbit, SymmetricPermutationInvariance) {
  const Parameters pr = make_parameters(113, 7);
  for (unsigned b = 0; b < 7; ++b) {
    for (unsigned c = 0; c < 7; ++c) {
      std::array<unsigned, 3> v{0, b, c};
      std::sort(v.begin(), v.end());
      const auto reference = orbit(pr, {0, b, c}).members;
      do {
        ASSERT_EQ(orbit(pr, {v[0], v[1], v[2]}).members, reference);
      } while (std::next_permutation(v.begin(), v.end()));
    }
  }
}

TEST(CanonicalForbiddenSet, Examples) {
  EXPECT_EQ(canonical_forbidden_set(structure(113, 7)),
            (std::set<Cycle>{{0, 0, 0}, {0, 0, 4}}));
  EXPECT_EQ(canonical_forbidden_set(structure(5, 2)), (std::set<Cycle>{{0, 0, 0}}));
  EXPECT_TRUE(canonical_forbidden_set(structure(3, 1)).empty());
}

TEST(CanonicalForbiddenSet, OrderIndependentAndIdempotent) {
  std::mt19937 rng(7);
  for_each_instance(400, 20, [&](const Parameters& pr) {
    const auto s = classify(CosetTable(pr));
    const auto canon = canonical_forbidden_set(s);
    auto forbidden = s.cycles_with(Status::Forbidden, false);
    std::shuffle(forbidden.begin(), forbidden.end(), rng);
    std::set<Cycle> shuffled;
    for (const Cycle& c : forbidden) shuffled.insert(orbit(pr, c).canon);
    ASSERT_EQ(shuffled, canon);
    for (const Cycle& c : canon) {
      ASSERT_EQ(orbit(pr, c).canon, c);
      ASSERT_TRUE(s.is_forbidden(c.b, c.c));
    }
    // Distinct representatives lie in distinct orbits.
    for (const Cycle& c : canon) {
      for (const Cycle& d : canon) {
        if (c != d) ASSERT_FALSE(orbit(pr, c).contains(d));
      }
    }
  });
}

TEST(Predicates, Ramsey) {
  EXPECT_TRUE(is_ramsey(structure(5, 2)));
  EXPECT_FALSE(is_ramsey(structure(113, 7)));
  EXPECT_TRUE(is_ramsey(structure(13, 3)));
  EXPECT_FALSE(is_ramsey(structure(3, 1)));
}

TEST(Predicates, AllFlexible) {
  EXPECT_TRUE(is_all_flexible(structure(3, 1)));
  EXPECT_FALSE(is_all_flexible(structure(113, 7)));
  EXPECT_FALSE(is_all_flexible(structure(71, 10)));
}

}  // namespace
}  // namespace comer
