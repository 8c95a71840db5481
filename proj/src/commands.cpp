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

#include "comer/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "comer/equivalence.hpp"
#include "comer/error.hpp"
#include "comer/numtheory.hpp"

namespace comer {

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
  t = std::max(t, 1u);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(0..count-1) on a pool; results land in index order. The first
// exception (by index) is rethrown after all workers finish.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < count; idx = next++) {
      try {
        results[idx] = fn(idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < worker_count(threads, count); ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<std::uint32_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                     std::uint64_t step_modulus = 1) {
  std::vector<std::uint32_t> out;
  lo = std::max<std::uint64_t>(lo, 3);
  hi = std::min<std::uint64_t>(hi, kMaxModulus - 1);
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if ((p - 1) % step_modulus == 0 && is_prime(p)) {
      out.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return out;
}

struct InstanceResult {
  std::vector<Mismatch> mismatches;
  std::string violation;
  std::uint64_t lemma2_checks = 0;
};

InstanceResult check_instance(std::uint32_t p, unsigned n) {
  InstanceResult r;
  const CosetTable table(make_parameters(p, n));
  const CycleStructure fast = classify(table);
  try {
    const CycleStructure naive = classify_naive(table);
    r.lemma2_checks = naive.work().lemma2_checks;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        if (fast.at(i, j) != naive.at(i, j)) {
          r.mismatches.push_back({p, n, i, j, fast.at(i, j), naive.at(i, j)});
        }
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Lemma2Violation) throw;
    r.violation = e.what();
  }
  return r;
}

}  // namespace

VerifySummary run_verify(std::uint64_t p_min, std::uint64_t p_max, unsigned n_max,
                         unsigned threads) {
  std::vector<std::pair<std::uint32_t, unsigned>> instances;
  const unsigned limit = std::min(n_max, kMaxCosets);
  if (p_min <= p_max) {
    for (const std::uint32_t p : primes_in(p_min, p_max)) {
      for (unsigned n = 1; n <= limit && n < p; ++n) {
        if ((p - 1) % n == 0) instances.emplace_back(p, n);
      }
    }
  }
  const auto results = parallel_map<InstanceResult>(
      instances.size(), threads,
      [&](std::size_t idx) { return check_instance(instances[idx].first, instances[idx].second); });

  VerifySummary summary;
  summary.instances = instances.size();
  for (const InstanceResult& r : results) {
    summary.lemma2_checks += r.lemma2_checks;
    summary.mismatches.insert(summary.mismatches.end(), r.mismatches.begin(),
                              r.mismatches.end());
    if (!r.violation.empty()) summary.lemma2_violations.push_back(r.violation);
  }
  return summary;
}

std::optional<SearchFilter> parse_filter(const std::string& name) {
  if (name == "none") return SearchFilter::None;
  if (name == "ramsey") return SearchFilter::Ramsey;
  if (name == "flexible") return SearchFilter::Flexible;
  return std::nullopt;
}

std::vector<AnalysisReport> run_search(unsigned n, std::uint64_t p_min,
                                       std::uint64_t p_max, SearchFilter filter,
                                       unsigned threads) {
  if (n < 1 || n > kMaxCosets) {
    throw Error(ErrorKind::TooManyCosets,
                "n = " + std::to_string(n) + " must lie in [1, " +
                    std::to_string(kMaxCosets) + "]");
  }
  const std::vector<std::uint32_t> primes =
      p_min <= p_max ? primes_in(p_min, p_max, n) : std::vector<std::uint32_t>{};
  auto reports = parallel_map<std::optional<AnalysisReport>>(
      primes.size(), threads, [&](std::size_t idx) -> std::optional<AnalysisReport> {
        AnalysisReport r = analyze(make_parameters(primes[idx], n));
        const bool keep = filter == SearchFilter::None ||
                          (filter == SearchFilter::Ramsey && r.ramsey) ||
                          (filter == SearchFilter::Flexible && r.all_flexible);
        if (!keep) return std::nullopt;
        return r;
      });
  std::vector<AnalysisReport> out;
  for (auto& r : reports) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

namespace {

Format parse_format(const std::string& s) {
  return s == "json" ? Format::Json : Format::Text;
}

std::string join_cycles(const std::vector<Cycle>& cycles) {
  std::string s;
  for (const Cycle& c : cycles) {
    if (!s.empty()) s += ' ';
    s += to_string(c);
  }
  return s.empty() ? "-" : s;
}

void print_slope(std::ostream& out, const char* name, double slope) {
  out << "slope " << name << ": ";
  if (std::isnan(slope)) {
    out << "n/a\n";
  } else {
    out << std::fixed << std::setprecision(3) << slope << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle structure of Comer relation algebras over Z/pZ"};
  app.require_subcommand(1);

  std::int64_t p = 0, n = 0;
  std::optional<std::int64_t> g;
  std::string format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify every cycle of one instance");
  analyze_cmd->add_option("--p", p, "Prime modulus")->required();
  analyze_cmd->add_option("--n", n, "Number of cosets (divides p - 1)")->required();
  analyze_cmd->add_option("--g", g, "Primitive root (default: smallest)");
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t p_min = 3, p_max = 0;
  unsigned n_max = 30;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check fast classifiers against the naive oracle");
  verify_cmd->add_option("--p-min", p_min);
  verify_cmd->add_option("--p-max", p_max)->required();
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--threads", threads, "Worker threads (0: hardware)");

  unsigned search_n = 0;
  std::string filter_name = "none";
  auto* search_cmd = app.add_subcommand("search", "Scan primes p = 1 (mod n) for structural properties");
  search_cmd->add_option("--n", search_n)->required();
  search_cmd->add_option("--p-min", p_min);
  search_cmd->add_option("--p-max", p_max)->required();
  search_cmd->add_option("--filter", filter_name)
      ->check(CLI::IsMember({"ramsey", "flexible", "none"}));
  search_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  search_cmd->add_option("--threads", threads, "Worker threads (0: hardware)");

  BenchOptions bench;
  std::string algorithms = "naive,fast";
  std::string out_path = "bench.csv";
  auto* bench_cmd = app.add_subcommand("bench", "Time naive and fast classification across primes");
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--p-max", bench.p_max);
  bench_cmd->add_option("--algorithms", algorithms, "Comma-separated: naive,fast");
  bench_cmd->add_option("--repetitions", bench.repetitions);
  bench_cmd->add_option("--out", out_path, "CSV output path");
  double min_batch_ms = bench.min_batch_seconds * 1e3;
  bench_cmd->add_option("--min-batch-ms", min_batch_ms,
                        "Minimum wall time per timed batch")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*analyze_cmd) {
      const AnalysisReport report = analyze(make_parameters(p, n, g));
      if (parse_format(format) == Format::Json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << to_text(report);
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const VerifySummary s = run_verify(p_min, p_max, n_max, threads);
      for (const Mismatch& m : s.mismatches) {
        out << "mismatch p=" << m.p << " n=" << m.n << " i=" << m.i << " j=" << m.j
            << " fast=" << to_string(m.fast) << " naive=" << to_string(m.naive) << '\n';
      }
      for (const std::string& v : s.lemma2_violations) out << "lemma2 violation: " << v << '\n';
      out << "instances: " << s.instances << '\n'
          << "lemma2 checks: " << s.lemma2_checks << '\n'
          << "lemma2 violations: " << s.lemma2_violations.size() << '\n'
          << "mismatches: " << s.mismatches.size() << '\n';
      if (!s.ok()) {
        err << "verify: fast and naive classifications disagree\n";
        return kExitInvariant;
      }
      return kExitOk;
    }

    if (*search_cmd) {
      const auto filter = parse_filter(filter_name);
      const auto reports = run_search(search_n, p_min, p_max, *filter, threads);
      if (parse_format(format) == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump() << '\n';
      } else {
        for (const auto& r : reports) {
          out << "p=" << r.params.p.value() << " n=" << r.params.n << " k=" << r.params.k
              << " g=" << r.params.g << " symmetric=" << (r.params.symmetric ? "true" : "false")
              << " forbidden=" << join_cycles(r.forbidden) << '\n';
        }
        out << "matches: " << reports.size() << '\n';
      }
      return kExitOk;
    }

    if (*bench_cmd) {
      bench.min_batch_seconds = min_batch_ms * 1e-3;
      bench.algorithms.clear();
      std::stringstream names(algorithms);
      for (std::string name; std::getline(names, name, ',');) {
        const auto a = parse_algorithm(name);
        if (!a) {
          err << "bench: unknown algorithm '" << name << "'\n";
          return kExitValidation;
        }
        bench.algorithms.push_back(*a);
      }
      if (bench.algorithms.empty()) {
        err << "bench: no algorithms selected\n";
        return kExitValidation;
      }
      if (bench.n < 1 || bench.n > kMaxCosets) {
        err << "bench: n must lie in [1, " << kMaxCosets << "]\n";
        return kExitValidation;
      }
      if (bench.p_max < bench.n + 2) {
        err << "bench: --p-max must be at least n + 2\n";
        return kExitValidation;
      }
      std::ofstream csv(out_path, std::ios::binary | std::ios::trunc);
      if (!csv) {
        err << "bench: cannot write " << out_path << '\n';
        return kExitValidation;
      }
      const auto records = run_bench(bench);
      write_csv(csv, records);
      if (!csv.flush()) {
        err << "bench: error writing " << out_path << '\n';
        return kExitValidation;
      }
      out << "records: " << records.size() << " -> " << out_path << '\n';
      for (const Algorithm a : bench.algorithms) print_slope(out, to_string(a), loglog_slope(records, a));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_invariant_violation() ? kExitInvariant : kExitValidation;
  }
  return kExitOk;
}

}  // namespace comer
