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
#include <optional>
#include <span>
#include <vector>

#include "comer/numtheory.hpp"

namespace comer {

using CosetIndex = std::uint8_t;

/// Largest supported coset count; one byte per residue in the lookup table.
inline constexpr unsigned kMaxCosets = 255;

/// One Comer instance: p = n*k + 1 with cosets X_i = g^i * X_0, where X_0 is
/// the subgroup of index n in (Z/pZ)^x.
struct Parameters {
  PrimeModulus p;
  unsigned n;
  unsigned k;
  Residue g;
  /// k even: every coset is closed under negation.
  bool symmetric;

  unsigned half() const noexcept { return n / 2; }
};

/// Validates (p, n) and derives k and g. Throws Error with kind NotPrime,
/// NotDivisor, NotPrimitiveRoot or TooManyCosets.
Parameters make_parameters(std::int64_t p, std::int64_t n,
                           std::optional<std::int64_t> g_override = std::nullopt);

/// The cosets X_0..X_{n-1} and a dense residue -> coset lookup.
///
/// classes(i)[a] = g^(a*n + i) mod p. class_of(0) is kIdentity.
class CosetTable {
 public:
  static constexpr CosetIndex kIdentity = 0xFF;

  explicit CosetTable(const Parameters& params);

  const Parameters& params() const noexcept { return params_; }
  unsigned n() const noexcept { return params_.n; }
  unsigned k() const noexcept { return params_.k; }
  std::uint32_t p() const noexcept { return params_.p.value(); }

  std::span<const Residue> coset(unsigned i) const {
    return {members_.data() + std::size_t{i} * params_.k, params_.k};
  }
  /// g^i, the first element of X_i.
  Residue leader(unsigned i) const { return members_[std::size_t{i} * params_.k]; }

  CosetIndex class_of(Residue r) const { return class_index_[r]; }
  bool contains(unsigned i, Residue r) const { return class_index_[r] == i; }

  /// Index of -X_i.
  unsigned negate_class(unsigned i) const;

 private:
  Parameters params_;
  std::vector<Residue> members_;  // n rows of k residues
  std::vector<CosetIndex> class_index_;
};

inline CosetTable build_coset_table(const Parameters& params) {
  return CosetTable(params);
}

}  // namespace comer
