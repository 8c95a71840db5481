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

#include "comer/report.hpp"

#include <sstream>

#include "comer/equivalence.hpp"

namespace comer {

AnalysisReport make_report(const CycleStructure& structure) {
  AnalysisReport report{structure.params(), {}, {}, {}, false, false};
  report.forbidden = structure.cycles_with(Status::Forbidden, true);
  report.mandatory = structure.cycles_with(Status::Mandatory, true);
  const auto canon = canonical_forbidden_set(structure);
  report.canonical_forbidden.assign(canon.begin(), canon.end());
  report.ramsey = is_ramsey(structure);
  report.all_flexible = is_all_flexible(structure);
  return report;
}

AnalysisReport analyze(const Parameters& params) {
  const CosetTable table(params);
  return make_report(classify(table));
}

namespace {

nlohmann::ordered_json cycle_array(const std::vector<Cycle>& cycles) {
  auto arr = nlohmann::ordered_json::array();
  for (const Cycle& c : cycles) arr.push_back({c.a, c.b, c.c});
  return arr;
}

void write_list(std::ostream& os, const char* label, const std::vector<Cycle>& cycles) {
  os << label << " (" << cycles.size() << "):";
  for (const Cycle& c : cycles) os << ' ' << to_string(c);
  os << '\n';
}

}  // namespace

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  os << '(' << c.a << ',' << c.b << ',' << c.c << ')';
  return os.str();
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.params.p.value();
  j["n"] = report.params.n;
  j["k"] = report.params.k;
  j["g"] = report.params.g;
  j["symmetric"] = report.params.symmetric;
  j["forbidden"] = cycle_array(report.forbidden);
  j["mandatory"] = cycle_array(report.mandatory);
  j["canonical_forbidden"] = cycle_array(report.canonical_forbidden);
  j["ramsey"] = report.ramsey;
  j["all_flexible"] = report.all_flexible;
  return j;
}

std::string to_text(const AnalysisReport& report) {
  const Parameters& pr = report.params;
  std::ostringstream os;
  os << "p = " << pr.p.value() << ", n = " << pr.n << ", k = " << pr.k
     << ", g = " << pr.g << '\n';
  os << "symmetric: " << (pr.symmetric ? "true" : "false") << '\n';
  write_list(os, "forbidden", report.forbidden);
  write_list(os, "mandatory", report.mandatory);
  write_list(os, "canonical forbidden", report.canonical_forbidden);
  os << "ramsey: " << (report.ramsey ? "true" : "false") << '\n';
  os << "all flexible: " << (report.all_flexible ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace comer
