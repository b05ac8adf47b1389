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

// The report every command produces: a config echo, named sections of
// statistics and metadata, serializable to JSON, CSV and a text table.
//
// JSON layout (schema_version 1):
//   { "schema_version": 1, "command": "...", "config": {...},
//     "sections": [ {"name": "...", "statistics": {...}}, ... ],
//     "metadata": {...} }
// Exact fractions are the strings "n/d"; bounded reals are objects
// {"decimal": "...", "value": v, "error_bound": e}.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ecavg::report {

inline constexpr int kSchemaVersion = 1;

struct Fraction {
  std::string text;  // "n/d"
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct Real {
  std::string decimal;
  double value = 0;
  double error_bound = 0;
  friend bool operator==(const Real&, const Real&) = default;
};

using IntList = std::vector<std::int64_t>;
using FloatList = std::vector<double>;
using Value = std::variant<std::int64_t, double, bool, std::string, Fraction, Real, IntList, FloatList>;

// Variant equality, except that empty lists of either kind compare equal.
bool value_equal(const Value& a, const Value& b);

Value integer(std::uint64_t v);
IntList integers(const std::vector<std::uint64_t>& v);

struct Entry {
  std::string key;
  Value value;
};

using Entries = std::vector<Entry>;

struct Section {
  std::string name;
  Entries stats;

  void add(std::string key, Value v) { stats.push_back({std::move(key), std::move(v)}); }
  const Value* find(std::string_view key) const;
};

struct Report {
  std::string command;
  Entries config;
  std::vector<Section> sections;
  Entries metadata;

  Section& add_section(std::string name);
  const Section* find(std::string_view name) const;
};

bool operator==(const Report& a, const Report& b);

enum class Format { kJson, kCsv, kTable };

Format parse_format(std::string_view s);

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_table(const Report& r);
std::string render(const Report& r, Format f);

// Inverse of to_json; throws DomainError on malformed input.
Report from_json(std::string_view text);

}  // namespace ecavg::report
