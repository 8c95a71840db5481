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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "comer/bench.hpp"
#include "comer/cycles.hpp"
#include "comer/report.hpp"

namespace comer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInvariant = 2;

struct Mismatch {
  std::uint32_t p;
  unsigned n;
  unsigned i;
  unsigned j;
  Status fast;
  Status naive;
};

struct VerifySummary {
  std::uint64_t instances = 0;
  std::uint64_t lemma2_checks = 0;
  std::vector<Mismatch> mismatches;
  /// Diagnostics from Error(Lemma2Violation), in instance order.
  std::vector<std::string> lemma2_violations;

  bool ok() const { return mismatches.empty() && lemma2_violations.empty(); }
};

/// Compares classify against classify_naive for every prime p in
/// [p_min, p_max] and every divisor n <= n_max of p - 1. Results do not depend
/// on `threads`.
VerifySummary run_verify(std::uint64_t p_min, std::uint64_t p_max, unsigned n_max,
                         unsigned threads = 0);

enum class SearchFilter { None, Ramsey, Flexible };

std::optional<SearchFilter> parse_filter(const std::string& name);

/// Reports for primes p = 1 (mod n) in range whose structure passes the
/// filter, ascending in p.
std::vector<AnalysisReport> run_search(unsigned n, std::uint64_t p_min,
                                       std::uint64_t p_max, SearchFilter filter,
                                       unsigned threads = 0);

/// Entry point shared by the executable and the tests. Returns the process
/// exit status: 0 success, 1 rejected input, 2 invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comer
