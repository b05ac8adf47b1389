// Copyright 2026 The ecavg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One builder per CLI subcommand. Each validates its arguments, runs the
// computation and returns a deterministic Report (timings are left out so
// equal inputs give byte-identical output).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report/report.hpp"
#include "survey/survey.hpp"

namespace ecavg::report {

// Rows (n, k) of the reference C^D(m)_{n,k} table and its m columns.
const std::vector<std::pair<std::uint64_t, std::int64_t>>& table3_rows();
const std::vector<std::uint64_t>& table3_columns();

// Columns (p, q) of the two-prime table.
const std::vector<std::pair<std::uint64_t, std::uint64_t>>& table2_columns();

struct DensitiesArgs {
  int table = 0;                    // 1, 2, 3, or 0 for a single query
  std::string kind = "cyclic";      // cyclic | divisibility
  std::uint64_t n = 1;
  std::optional<std::int64_t> k;    // every unit class mod n when empty
  std::vector<std::uint64_t> m_list;
  int precision = 10;
};

Report densities_report(const DensitiesArgs& args);

struct CurveArgs {
  std::string coeffs;               // "a1,a2,a3,a4,a6"
  double x = 1e4;
  std::uint64_t n = 1;
  std::optional<std::int64_t> k;
  std::vector<std::uint64_t> m_list;
};

Report curve_report(const CurveArgs& args);

struct ClassCountArgs {
  std::uint64_t p = 0;              // a single prime, or
  std::uint64_t pmax = 0;           // every prime 3 < p <= pmax
  std::vector<std::uint64_t> m_list;
  unsigned threads = 0;
};

Report classcount_report(const ClassCountArgs& args);

Report survey_report(const survey::SurveyConfig& config);
Report satotate_report(const survey::SurveyConfig& config);

struct PrimeSumArgs {
  double x = 1e4;
  std::uint64_t n = 1;
  std::optional<std::int64_t> k;
  std::vector<std::uint64_t> m_list;
  bool identity = true;             // also run the exact T_{n,k} check
};

Report primesums_report(const PrimeSumArgs& args);

struct CollisionArgs {
  std::uint64_t bound = 10000;
  unsigned threads = 0;
};

Report collisions_report(const CollisionArgs& args);

}  // namespace ecavg::report
