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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comer/cosets.hpp"

namespace comer {

enum class Algorithm { Naive, Fast };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct TimingRecord {
  std::uint32_t p = 0;
  unsigned n = 0;
  unsigned k = 0;
  Algorithm algorithm = Algorithm::Fast;
  double seconds = 0.0;
  std::uint64_t tests = 0;
};

struct BenchOptions {
  unsigned n = 23;
  std::uint64_t p_max = 15000;
  std::vector<Algorithm> algorithms{Algorithm::Naive, Algorithm::Fast};
  unsigned repetitions = 3;
  /// Each repetition repeats the instance until at least this much wall time
  /// has passed and reports the per-run mean, so microsecond-scale instances
  /// are not lost in clock resolution.
  double min_batch_seconds = 5e-3;
};

/// Table construction plus classification for one instance, best of
/// `repetitions` batches.
TimingRecord time_instance(const Parameters& params, Algorithm algorithm,
                           unsigned repetitions, double min_batch_seconds);

/// One record per (prime p = 1 mod n, algorithm) with p <= p_max, grouped by
/// algorithm in the order given and ascending in p within each group.
std::vector<TimingRecord> run_bench(const BenchOptions& options);

/// Least-squares slope of log(y) against log(x). NaN with fewer than two
/// distinct x values.
double loglog_slope(std::span<const double> x, std::span<const double> y);

double loglog_slope(std::span<const TimingRecord> records, Algorithm algorithm);

/// Header `p,n,k,algorithm,seconds,tests`, LF line endings.
void write_csv(std::ostream& os, std::span<const TimingRecord> records);

}  // namespace comer
