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

#include "comer/cycles.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "comer/error.hpp"

namespace comer {

const char* to_string(Status s) {
  return s == Status::Forbidden ? "forbidden" : "mandatory";
}

CycleStructure::CycleStructure(const Parameters& params)
    : params_(params),
      status_(std::size_t{params.n} * params.n, Status::Mandatory) {}

std::vector<Cycle> CycleStructure::cycles_with(Status s, bool upper_only) const {
  std::vector<Cycle> out;
  for (unsigned i = 0; i < n(); ++i) {
    for (unsigned j = upper_only ? i : 0; j < n(); ++j) {
      if (at(i, j) == s) out.push_back({0, i, j});
    }
  }
  return out;
}

std::optional<std::pair<unsigned, unsigned>> first_mismatch(
    const CycleStructure& lhs, const CycleStructure& rhs) {
  const unsigned n = std::min(lhs.n(), rhs.n());
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (lhs.at(i, j) != rhs.at(i, j)) return std::pair{i, j};
    }
  }
  if (lhs.n() != rhs.n()) return std::pair{n, n};
  return std::nullopt;
}

std::size_t ResidueSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void ResidueSet::clear() { std::fill(bits_.begin(), bits_.end(), 0); }

ResidueSet sumset(const CosetTable& table, unsigned i, unsigned j) {
  const std::uint32_t p = table.p();
  ResidueSet out(p);
  for (const Residue x : table.coset(i)) {
    for (const Residue y : table.coset(j)) {
      // x + y < 2p < 2^32
      Residue s = x + y;
      if (s >= p) s -= p;
      out.insert(s);
    }
  }
  return out;
}

CycleStructure classify_naive(const CosetTable& table) {
  CycleStructure result(table.params());
  WorkCounts& work = result.work();
  const std::uint32_t p = table.p();
  const unsigned n = table.n();
  const unsigned k = table.k();
  const auto subgroup = table.coset(0);

  // |(X_0 + X_i) ∩ X_j| for every j at once: each distinct sum is counted
  // against the coset it lies in. Bucket kIdentity collects the sum 0.
  std::vector<std::uint8_t> seen(p);
  std::array<std::uint32_t, 256> hits{};
  for (unsigned i = 0; i < n; ++i) {
    if (i > 0) std::fill(seen.begin(), seen.end(), 0);
    std::fill_n(hits.begin(), n, 0u);
    hits[CosetTable::kIdentity] = 0;
    for (const Residue x : subgroup) {
      for (const Residue y : table.coset(i)) {
        Residue s = x + y;
        if (s >= p) s -= p;
        hits[table.class_of(s)] += 1u - seen[s];
        seen[s] = 1;
      }
    }
    for (unsigned j = 0; j < n; ++j) {
      if (hits[j] != 0 && hits[j] != k) {
        throw Error(ErrorKind::Lemma2Violation,
                    "(X_0 + X_" + std::to_string(i) + ") meets X_" +
                        std::to_string(j) + " in " + std::to_string(hits[j]) +
                        " of " + std::to_string(k) + " elements (p = " +
                        std::to_string(p) + ", n = " + std::to_string(n) + ")");
      }
      result.set(i, j, hits[j] == k ? Status::Mandatory : Status::Forbidden);
    }
  }
  const std::uint64_t pairs = std::uint64_t{n} * n;
  work.additions += std::uint64_t{n} * k * k;
  work.probes += std::uint64_t{n} * k * k;
  work.lemma2_checks += pairs;
  work.tests += pairs;
  return result;
}

DifferenceSets::DifferenceSets(const CosetTable& table)
    : k_(table.k()), diffs_(std::size_t{table.n()} * table.k()) {
  const std::uint32_t p = table.p();
  const auto subgroup = table.coset(0);
  auto out = diffs_.begin();
  for (unsigned j = 0; j < table.n(); ++j) {
    const Residue lead = table.leader(j);
    for (const Residue x : subgroup) {
      *out++ = lead >= x ? lead - x : lead + (p - x);
    }
  }
}

namespace {

// Counters live in locals: status bytes would otherwise alias them.
Status probe_row(const CosetTable& table, std::span<const Residue> row,
                 unsigned i, std::uint64_t& probes) {
  for (std::size_t a = 0; a < row.size(); ++a) {
    if (table.contains(i, row[a])) {
      probes += a + 1;
      return Status::Mandatory;
    }
  }
  probes += row.size();
  return Status::Forbidden;
}

}  // namespace

Status fast_test(const CosetTable& table, const DifferenceSets& diffs,
                 unsigned i, unsigned j, WorkCounts* work) {
  std::uint64_t probes = 0;
  const Status verdict = probe_row(table, diffs.row(j), i, probes);
  if (work != nullptr) {
    ++work->tests;
    work->probes += probes;
  }
  return verdict;
}

CycleStructure classify_fast_symmetric(const CosetTable& table) {
  if (!table.params().symmetric) {
    throw Error(ErrorKind::NotSymmetric,
                "k = " + std::to_string(table.k()) +
                    " is odd; the symmetric sweep needs k even");
  }
  CycleStructure result(table.params());
  const DifferenceSets diffs(table);
  const unsigned n = table.n();
  std::uint64_t tests = 0;
  std::uint64_t probes = 0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) {
      const Status s = probe_row(table, diffs.row(j), i, probes);
      ++tests;
      result.set(i, j, s);
      result.set(j, i, s);
    }
  }
  result.work().additions += std::uint64_t{n} * table.k();
  result.work().tests += tests;
  result.work().probes += probes;
  return result;
}

CycleStructure classify_fast_asymmetric(const CosetTable& table) {
  if (table.params().symmetric) {
    throw Error(ErrorKind::NotAsymmetric,
                "k = " + std::to_string(table.k()) +
                    " is even; the asymmetric sweep needs k odd");
  }
  CycleStructure result(table.params());
  const DifferenceSets diffs(table);
  const unsigned n = table.n();
  const unsigned m = n / 2;
  std::uint64_t tests = 0;
  std::uint64_t probes = 0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned t = i; t < n; ++t) {
      const unsigned j = (t + m) % n;
      const Status s = probe_row(table, diffs.row(j), i, probes);
      ++tests;
      result.set(i, j, s);
      // (0, i, j) ~ (0, j + m, i + m); on the diagonal t == i this is itself.
      result.set((j + m) % n, (i + m) % n, s);
    }
  }
  result.work().additions += std::uint64_t{n} * table.k();
  result.work().tests += tests;
  result.work().probes += probes;
  return result;
}

CycleStructure classify(const CosetTable& table) {
  return table.params().symmetric ? classify_fast_symmetric(table)
                                  : classify_fast_asymmetric(table);
}

}  // namespace comer
