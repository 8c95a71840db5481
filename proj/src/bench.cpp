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

#include "comer/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "comer/cycles.hpp"
#include "comer/numtheory.hpp"

namespace comer {

const char* to_string(Algorithm a) {
  return a == Algorithm::Naive ? "naive" : "fast";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::Naive;
  if (name == "fast") return Algorithm::Fast;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimizer from discarding the classification.
volatile std::uint64_t g_sink = 0;

std::uint64_t run_once(const Parameters& params, Algorithm algorithm) {
  const CosetTable table(params);
  const CycleStructure s =
      algorithm == Algorithm::Naive ? classify_naive(table) : classify(table);
  g_sink = g_sink + static_cast<std::uint64_t>(s.at(0, 0));
  return s.work().tests;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

namespace {

// Per-run seconds of one batch.
double time_batch(const Parameters& params, Algorithm algorithm, std::uint64_t batch) {
  const auto start = Clock::now();
  for (std::uint64_t b = 0; b < batch; ++b) run_once(params, algorithm);
  return seconds_since(start) / static_cast<double>(batch);
}

struct Slot {
  Parameters params;
  TimingRecord record;
  std::uint64_t batch = 1;
};

Slot calibrate(const Parameters& params, Algorithm algorithm, double min_batch_seconds) {
  Slot slot{params, {}, 1};
  TimingRecord& rec = slot.record;
  rec.p = params.p.value();
  rec.n = params.n;
  rec.k = params.k;
  rec.algorithm = algorithm;
  rec.seconds = std::numeric_limits<double>::infinity();

  const auto start = Clock::now();
  rec.tests = run_once(params, algorithm);
  const double first = seconds_since(start);
  if (first < min_batch_seconds) {
    slot.batch = static_cast<std::uint64_t>(
        std::ceil(min_batch_seconds / std::max(first, 1e-9)));
  }
  return slot;
}

}  // namespace

TimingRecord time_instance(const Parameters& params, Algorithm algorithm,
                           unsigned repetitions, double min_batch_seconds) {
  Slot slot = calibrate(params, algorithm, min_batch_seconds);
  for (unsigned r = 0; r < std::max(repetitions, 1u); ++r) {
    slot.record.seconds =
        std::min(slot.record.seconds, time_batch(params, algorithm, slot.batch));
  }
  return slot.record;
}

std::vector<TimingRecord> run_bench(const BenchOptions& options) {
  std::vector<Slot> slots;
  for (const Algorithm algorithm : options.algorithms) {
    for (std::uint64_t p = options.n + 1; p <= options.p_max; p += options.n) {
      if (p < 3 || !is_prime(p)) continue;
      slots.push_back(calibrate(make_parameters(static_cast<std::int64_t>(p), options.n),
                                algorithm, options.min_batch_seconds));
    }
  }
  // Repetitions sweep the whole grid in rounds, so a slow stretch of wall
  // time is spread across all primes instead of hitting a contiguous range.
  for (unsigned r = 0; r < std::max(options.repetitions, 1u); ++r) {
    for (Slot& s : slots) {
      s.record.seconds = std::min(
          s.record.seconds, time_batch(s.params, s.record.algorithm, s.batch));
    }
  }
  std::vector<TimingRecord> records;
  records.reserve(slots.size());
  for (const Slot& s : slots) records.push_back(s.record);
  return records;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t count = std::min(x.size(), y.size());
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / sxx;
}

double loglog_slope(std::span<const TimingRecord> records, Algorithm algorithm) {
  std::vector<double> x, y;
  for (const TimingRecord& r : records) {
    if (r.algorithm != algorithm) continue;
    x.push_back(r.p);
    y.push_back(r.seconds);
  }
  return loglog_slope(x, y);
}

void write_csv(std::ostream& os, std::span<const TimingRecord> records) {
  os << "p,n,k,algorithm,seconds,tests\n";
  const auto old_precision = os.precision(9);
  for (const TimingRecord& r : records) {
    os << r.p << ',' << r.n << ',' << r.k << ',' << to_string(r.algorithm) << ','
       << r.seconds << ',' << r.tests << '\n';
  }
  os.precision(old_precision);
}

}  // namespace comer
