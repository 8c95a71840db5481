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

#include <string>
#include <vector>

#include <json.hpp>

#include "comer/cosets.hpp"
#include "comer/cycles.hpp"

namespace comer {

/// Presentation view of one instance: cycles (0, x, y) with x <= y, sorted
/// lexicographically, as in the usual published tables.
struct AnalysisReport {
  Parameters params;
  std::vector<Cycle> forbidden;
  std::vector<Cycle> mandatory;
  std::vector<Cycle> canonical_forbidden;
  bool ramsey = false;
  bool all_flexible = false;
};

AnalysisReport make_report(const CycleStructure& structure);

/// Builds the coset table and runs the fast classifier.
AnalysisReport analyze(const Parameters& params);

enum class Format { Text, Json };

/// Keys in fixed order: p, n, k, g, symmetric, forbidden, mandatory,
/// canonical_forbidden, ramsey, all_flexible.
nlohmann::ordered_json to_json(const AnalysisReport& report);

std::string to_text(const AnalysisReport& report);

/// "(0,x,y)"
std::string to_string(const Cycle& c);

}  // namespace comer
