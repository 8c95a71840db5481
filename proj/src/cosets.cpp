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

#include <string>

#include "comer/error.hpp"

namespace comer {

Parameters make_parameters(std::int64_t p, std::int64_t n,
                           std::optional<std::int64_t> g_override) {
  if (p < 0) {
    throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p) + " is not prime");
  }
  const PrimeModulus modulus(static_cast<std::uint64_t>(p));
  const std::int64_t order = p - 1;
  if (n < 1 || order % n != 0) {
    throw Error(ErrorKind::NotDivisor, "n = " + std::to_string(n) +
                                           " does not divide p - 1 = " +
                                           std::to_string(order));
  }
  if (n > static_cast<std::int64_t>(kMaxCosets)) {
    throw Error(ErrorKind::TooManyCosets,
                "n = " + std::to_string(n) + " exceeds the supported maximum of " +
                    std::to_string(kMaxCosets));
  }

  Residue g = 0;
  if (g_override) {
    const std::int64_t candidate = *g_override;
    if (candidate <= 0 || candidate >= p ||
        !is_primitive_root(static_cast<Residue>(candidate), modulus)) {
      throw Error(ErrorKind::NotPrimitiveRoot,
                  "g = " + std::to_string(candidate) +
                      " is not a primitive root modulo " + std::to_string(p));
    }
    g = static_cast<Residue>(candidate);
  } else {
    g = smallest_primitive_root(modulus);
  }

  const auto cosets = static_cast<unsigned>(n);
  const auto size = static_cast<unsigned>(order / n);
  return Parameters{modulus, cosets, size, g, size % 2 == 0};
}

CosetTable::CosetTable(const Parameters& params)
    : params_(params),
      members_(std::size_t{params.n} * params.k),
      class_index_(params.p.value(), kIdentity) {
  const std::uint64_t p = params_.p.value();
  const unsigned n = params_.n;
  const unsigned k = params_.k;
  // Walk g^e for e = 0..p-2 once; e = a*n + i lands in X_i at slot a.
  std::uint64_t x = 1;
  unsigned i = 0;
  unsigned a = 0;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    members_[std::size_t{i} * k + a] = static_cast<Residue>(x);
    class_index_[x] = static_cast<CosetIndex>(i);
    x = x * params_.g % p;
    if (++i == n) {
      i = 0;
      ++a;
    }
  }
}

unsigned CosetTable::negate_class(unsigned i) const {
  return class_index_[p() - leader(i)];
}

}  // namespace comer
