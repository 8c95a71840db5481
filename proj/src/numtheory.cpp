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

#include "comer/numtheory.hpp"

#include <stdexcept>
#include <string>

#include "comer/error.hpp"

namespace comer {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorKind::TooManyCosets: return "TooManyCosets";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotAsymmetric: return "NotAsymmetric";
    case ErrorKind::Lemma2Violation: return "Lemma2Violation";
  }
  return "Unknown";
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p >= kMaxModulus || p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime,
                "p = " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0 || m % 3 == 0) return false;
  // 6k +- 1 wheel; d*d cannot overflow for m < 2^63.
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t m) {
  if (m < 2) {
    throw std::invalid_argument("factorize: argument must be >= 2, got " +
                                std::to_string(m));
  }
  std::vector<PrimePower> factors;
  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e > 0) factors.push_back({d, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) factors.push_back({m, 1});
  return factors;
}

Residue pow_mod(Residue base, std::uint64_t exponent, PrimeModulus p) {
  const std::uint64_t mod = p.value();
  std::uint64_t result = 1 % mod;
  std::uint64_t b = base % mod;
  while (exponent > 0) {
    if (exponent & 1) result = result * b % mod;
    b = b * b % mod;
    exponent >>= 1;
  }
  return static_cast<Residue>(result);
}

bool is_primitive_root(Residue g, PrimeModulus p) {
  if (g == 0 || g >= p.value()) return false;
  const std::uint64_t order = p.value() - 1;
  for (const auto& [q, e] : factorize(order)) {
    if (pow_mod(g, order / q, p) == 1) return false;
  }
  return true;
}

Residue smallest_primitive_root(PrimeModulus p) {
  const std::uint64_t order = p.value() - 1;
  const auto factors = factorize(order);
  for (Residue g = 2; g < p.value(); ++g) {
    bool generates = true;
    for (const auto& [q, e] : factors) {
      if (pow_mod(g, order / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  // Unreachable: every prime has a primitive root.
  throw std::logic_error("no primitive root found");
}

}  // namespace comer
