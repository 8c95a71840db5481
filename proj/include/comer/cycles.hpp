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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "comer/cosets.hpp"

namespace comer {

enum class Status : std::uint8_t { Mandatory, Forbidden };

const char* to_string(Status s);

/// The diversity cycle (R_a, R_b, R_c): forbidden iff (X_a + X_b) meets X_c
/// nowhere. Normalized cycles have a == 0.
struct Cycle {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

struct WorkCounts {
  /// Pair classifications performed (one per (i, j) decided directly).
  std::uint64_t tests = 0;
  std::uint64_t additions = 0;
  /// Lookups into a sumset bitmap or the coset index.
  std::uint64_t probes = 0;
  /// Superset-or-disjoint checks made by the naive oracle.
  std::uint64_t lemma2_checks = 0;
};

/// Mandatory/forbidden status of every (0, i, j), 0 <= i, j < n.
class CycleStructure {
 public:
  explicit CycleStructure(const Parameters& params);

  const Parameters& params() const noexcept { return params_; }
  unsigned n() const noexcept { return params_.n; }

  Status at(unsigned i, unsigned j) const { return status_[i * params_.n + j]; }
  bool is_forbidden(unsigned i, unsigned j) const {
    return at(i, j) == Status::Forbidden;
  }
  void set(unsigned i, unsigned j, Status s) { status_[i * params_.n + j] = s; }

  const WorkCounts& work() const noexcept { return work_; }
  WorkCounts& work() noexcept { return work_; }

  /// Cycles (0, x, y) with the given status, lexicographic. With
  /// `upper_only`, only x <= y is listed.
  std::vector<Cycle> cycles_with(Status s, bool upper_only) const;

  /// Entrywise comparison; work counts are ignored.
  friend bool operator==(const CycleStructure& lhs, const CycleStructure& rhs) {
    return lhs.params_.n == rhs.params_.n && lhs.status_ == rhs.status_;
  }

 private:
  Parameters params_;
  std::vector<Status> status_;
  WorkCounts work_;
};

/// First (i, j) in row-major order where the two structures disagree.
std::optional<std::pair<unsigned, unsigned>> first_mismatch(
    const CycleStructure& lhs, const CycleStructure& rhs);

/// Membership bitmap over Z/pZ.
class ResidueSet {
 public:
  explicit ResidueSet(std::uint32_t p) : bits_(p, 0) {}

  void insert(Residue r) { bits_[r] = 1; }
  bool contains(Residue r) const { return bits_[r] != 0; }
  std::size_t count() const;
  std::uint32_t modulus() const noexcept {
    return static_cast<std::uint32_t>(bits_.size());
  }
  void clear();

 private:
  std::vector<std::uint8_t> bits_;
};

/// X_i + X_j, computed with k^2 additions.
ResidueSet sumset(const CosetTable& table, unsigned i, unsigned j);

/// Quadratic reference classifier over the full n x n grid, valid for either
/// parity of k. Each sumset X_0 + X_i is enumerated pair by pair and its
/// intersection size with every X_j is counted; nothing is inferred from
/// symmetry. An intersection that is neither empty nor all of X_j throws
/// Error(Lemma2Violation).
CycleStructure classify_naive(const CosetTable& table);

/// The translates g^j - X_0 (mod p), j = 0..n-1, k residues each.
class DifferenceSets {
 public:
  explicit DifferenceSets(const CosetTable& table);

  std::span<const Residue> row(unsigned j) const {
    return {diffs_.data() + std::size_t{j} * k_, k_};
  }

 private:
  unsigned k_;
  std::vector<Residue> diffs_;
};

/// Forbidden iff (g^j - X_0) and X_i are disjoint. Stops at the first hit.
Status fast_test(const CosetTable& table, const DifferenceSets& diffs,
                 unsigned i, unsigned j, WorkCounts* work = nullptr);

/// Sweeps j >= i and mirrors across the diagonal. Requires k even; throws
/// Error(NotSymmetric) otherwise.
CycleStructure classify_fast_symmetric(const CosetTable& table);

/// Sweeps the upper triangle of A[i][t] = (0, i, t + m) and fills the rest
/// through (0, i, j) ~ (0, j + m, i + m). Requires k odd; throws
/// Error(NotAsymmetric) otherwise.
CycleStructure classify_fast_asymmetric(const CosetTable& table);

/// Dispatches on the parity of k.
CycleStructure classify(const CosetTable& table);

}  // namespace comer
