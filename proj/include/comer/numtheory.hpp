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

#include <cstdint>
#include <vector>

namespace comer {

using Residue = std::uint32_t;

/// An odd prime below 2^31. Residue products then fit in 64 bits.
class PrimeModulus {
 public:
  /// Throws Error(NotPrime) unless `p` is an odd prime below 2^31.
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic trial division; exact for every m < 2^63.
bool is_prime(std::uint64_t m);

/// Prime factorization with strictly increasing primes. Throws
/// std::invalid_argument for m < 2.
std::vector<PrimePower> factorize(std::uint64_t m);

Residue pow_mod(Residue base, std::uint64_t exponent, PrimeModulus p);

/// True iff g generates (Z/pZ)^x, i.e. g^((p-1)/q) != 1 for each prime q | p-1.
bool is_primitive_root(Residue g, PrimeModulus p);

Residue smallest_primitive_root(PrimeModulus p);

}  // namespace comer
