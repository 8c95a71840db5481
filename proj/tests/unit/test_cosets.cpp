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

#include "comer/cosets.hpp"

#include <set>

#include <gtest/gtest.h>

#include "comer/error.hpp"
#include "oracle.hpp"

namespace comer {
namespace {

ErrorKind kind_of(std::int64_t p, std::int64_t n, std::optional<std::int64_t> g = {}) {
  try {
    make_parameters(p, n, g);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for p=" << p << " n=" << n;
  return ErrorKind::Lemma2Violation;
}

std::vector<Residue> as_vector(std::span<const Residue> s) { return {s.begin(), s.end()}; }

TEST(MakeParameters, SymmetricExample) {
  const Parameters pr = make_parameters(113, 7);
  EXPECT_EQ(pr.p.value(), 113u);
  EXPECT_EQ(pr.n, 7u);
  EXPECT_EQ(pr.k, 16u);
  EXPECT_EQ(pr.g, 3u);
  EXPECT_TRUE(pr.symmetric);
}

TEST(MakeParameters, AsymmetricExample) {
  const Parameters pr = make_parameters(71, 10);
  EXPECT_EQ(pr.k, 7u);
  EXPECT_EQ(pr.g, 7u);
  EXPECT_FALSE(pr.symmetric);
}

TEST(MakeParameters, Errors) {
  EXPECT_EQ(kind_of(113, 5), ErrorKind::NotDivisor);
  EXPECT_EQ(kind_of(113, 0), ErrorKind::NotDivisor);
  EXPECT_EQ(kind_of(113, -7), ErrorKind::NotDivisor);
  EXPECT_EQ(kind_of(113, 113), ErrorKind::NotDivisor);
  EXPECT_EQ(kind_of(111, 2), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of(2, 1), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of(-5, 1), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of(113, 7, 2), ErrorKind::NotPrimitiveRoot);  // 2 is a QR mod 113
  EXPECT_EQ(kind_of(113, 7, 0), ErrorKind::NotPrimitiveRoot);
  EXPECT_EQ(kind_of(113, 7, 113), ErrorKind::NotPrimitiveRoot);
  // 257 - 1 = 256 = n * k with n = 256 > 255.
  EXPECT_EQ(kind_of(257, 256), ErrorKind::TooManyCosets);
}

TEST(MakeParameters, GeneratorOverride) {
  const Parameters pr = make_parameters(113, 7, 5);
  EXPECT_EQ(pr.g, 5u);
  EXPECT_EQ(make_parameters(113, 7, std::nullopt).g, 3u);
}

TEST(MakeParameters, DegenerateCounts) {
  const Parameters one = make_parameters(3, 1);
  EXPECT_EQ(one.k, 2u);
  EXPECT_TRUE(one.symmetric);
  const Parameters singletons = make_parameters(13, 12);
  EXPECT_EQ(singletons.k, 1u);
  EXPECT_FALSE(singletons.symmetric);
}

TEST(MakeParameters, InvariantsOverPrimes) {
  const auto prime = testing::sieve(2000);
  for (std::int64_t p = 3; p <= 2000; ++p) {
    if (!prime[p]) continue;
    for (std::int64_t n = 1; n < p && n <= 255; ++n) {
      if ((p - 1) % n != 0) continue;
      const Parameters pr = make_parameters(p, n);
      ASSERT_EQ(std::int64_t{pr.n} * pr.k, p - 1);
      ASSERT_EQ(pr.symmetric, pr.k % 2 == 0);
      if (pr.k % 2 == 1) ASSERT_EQ(pr.n % 2, 0u);
    }
  }
}

TEST(CosetTable, ThirteenByFour) {
  const CosetTable t(make_parameters(13, 4));
  EXPECT_EQ(as_vector(t.coset(0)), (std::vector<Residue>{1, 3, 9}));
  EXPECT_EQ(as_vector(t.coset(1)), (std::vector<Residue>{2, 6, 5}));
  EXPECT_EQ(as_vector(t.coset(2)), (std::vector<Residue>{4, 12, 10}));
  EXPECT_EQ(as_vector(t.coset(3)), (std::vector<Residue>{8, 11, 7}));
  EXPECT_EQ(t.class_of(0), CosetTable::kIdentity);
  EXPECT_EQ(t.class_of(12), 2);
  EXPECT_EQ(t.leader(3), 8u);
}

TEST(CosetTable, TrivialGroup) {
  const CosetTable t(make_parameters(3, 1));
  EXPECT_EQ(as_vector(t.coset(0)), (std::vector<Residue>{1, 2}));
}

TEST(CosetTable, PartitionAt113) {
  const CosetTable t(make_parameters(113, 7));
  std::set<Residue> all{0};
  for (unsigned i = 0; i < 7; ++i) {
    EXPECT_EQ(t.coset(i).size(), 16u);
    all.insert(t.coset(i).begin(), t.coset(i).end());
  }
  EXPECT_EQ(all.size(), 113u);
}

// Against independent repeated multiplication, for every instance up to 1500.
TEST(CosetTable, MatchesBruteForceAndPartitions) {
  const auto prime = testing::sieve(1500);
  for (std::int64_t p = 3; p <= 1500; ++p) {
    if (!prime[p]) continue;
    for (unsigned n = 1; n < p && n <= 40; ++n) {
      if ((p - 1) % n != 0) continue;
      const Parameters pr = make_parameters(p, n);
      const CosetTable t(pr);
      const auto ref = testing::brute_cosets(p, n, pr.g);
      for (unsigned i = 0; i < n; ++i) {
        const std::set<std::uint64_t> got(t.coset(i).begin(), t.coset(i).end());
        ASSERT_EQ(got, ref[i]) << "p=" << p << " n=" << n << " i=" << i;
        ASSERT_EQ(t.coset(i).size(), pr.k);
      }
      ASSERT_EQ(t.class_of(0), CosetTable::kIdentity);
      for (Residue r = 1; r < static_cast<Residue>(p); ++r) {
        const unsigned c = t.class_of(r);
        ASSERT_LT(c, n);
        ASSERT_TRUE(ref[c].contains(r));
      }
      if (n >= 2) ASSERT_EQ(t.class_of(pr.g), 1);
    }
  }
}

TEST(CosetTable, MultiplyingByGShiftsCosets) {
  for (auto [p, n] : {std::pair{113, 7}, {71, 10}, {13, 4}, {1009, 24}, {997, 83}}) {
    const CosetTable t(make_parameters(p, n));
    const std::uint64_t g = t.params().g;
    for (unsigned i = 0; i < t.n(); ++i) {
      const unsigned next = (i + 1) % t.n();
      for (const Residue x : t.coset(i)) {
        ASSERT_EQ(t.class_of(static_cast<Residue>(x * g % p)), next);
      }
    }
  }
}

TEST(NegateClass, Examples) {
  EXPECT_EQ(CosetTable(make_parameters(113, 7)).negate_class(4), 4u);
  EXPECT_EQ(CosetTable(make_parameters(71, 10)).negate_class(2), 7u);
  EXPECT_EQ(CosetTable(make_parameters(13, 4)).negate_class(0), 2u);
}

TEST(NegateClass, InvolutionWithParityRule) {
  const auto prime = testing::sieve(1200);
  for (std::int64_t p = 3; p <= 1200; ++p) {
    if (!prime[p]) continue;
    for (unsigned n = 1; n < p && n <= 60; ++n) {
      if ((p - 1) % n != 0) continue;
      const CosetTable t(make_parameters(p, n));
      for (unsigned i = 0; i < n; ++i) {
        const unsigned neg = t.negate_class(i);
        ASSERT_EQ(t.negate_class(neg), i);
        ASSERT_EQ(neg, t.params().symmetric ? i : (i + n / 2) % n);
        for (const Residue x : t.coset(i)) ASSERT_EQ(t.class_of(p - x), neg);
      }
    }
  }
}

}  // namespace
}  // namespace comer
