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

#include "report/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "numth/integer.hpp"

namespace ecavg::report {

using Json = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_bound(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

std::string plain(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_double(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, Fraction>) return x.text;
        else if constexpr (std::is_same_v<T, Real>) return x.decimal + " +/- " + format_bound(x.error_bound);
        else return join(x, ";");
      },
      v);
}

Json to_json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fraction>) {
          return x.text;
        } else if constexpr (std::is_same_v<T, Real>) {
          Json o = Json::object();
          o["decimal"] = x.decimal;
          o["value"] = x.value;
          o["error_bound"] = x.error_bound;
          return o;
        } else {
          return Json(x);
        }
      },
      v);
}

const std::regex& fraction_pattern() {
  static const std::regex re(R"(-?[0-9]+/[0-9]+)");
  return re;
}

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed report JSON: " + what); }

Value from_json_value(const Json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) malformed(where + " out of range");
    return static_cast<std::int64_t>(u);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (std::regex_match(s, fraction_pattern())) return Fraction{std::move(s)};
    return s;
  }
  if (j.is_object()) {
    if (j.size() != 3 || !j.contains("decimal") || !j.contains("value") || !j.contains("error_bound") ||
        !j["decimal"].is_string() || !j["value"].is_number() || !j["error_bound"].is_number()) {
      malformed(where + " is not a bounded real");
    }
    return Real{j["decimal"].get<std::string>(), j["value"].get<double>(), j["error_bound"].get<double>()};
  }
  if (j.is_array()) {
    const bool all_int = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number_integer(); });
    if (all_int) {
      IntList out;
      for (const Json& e : j) out.push_back(e.get<std::int64_t>());
      return out;
    }
    FloatList out;
    for (const Json& e : j) {
      if (!e.is_number()) malformed(where + " has a non-numeric list element");
      out.push_back(e.get<double>());
    }
    return out;
  }
  malformed(where + " has an unsupported value");
}

Json entries_json(const Entries& entries) {
  Json o = Json::object();
  for (const Entry& e : entries) o[e.key] = to_json_value(e.value);
  return o;
}

Entries entries_from(const Json& j, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  Entries out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out.push_back({it.key(), from_json_value(it.value(), where + "." + it.key())});
  }
  return out;
}

bool entries_equal(const Entries& a, const Entries& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].key != b[i].key || !value_equal(a[i].value, b[i].value)) return false;
  }
  return true;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void table_block(std::ostringstream& out, const std::string& title, const Entries& entries) {
  out << "[" << title << "]\n";
  std::size_t width = 0;
  for (const Entry& e : entries) width = std::max(width, e.key.size());
  for (const Entry& e : entries) {
    out << "  " << e.key << std::string(width - e.key.size() + 2, ' ') << plain(e.value) << "\n";
  }
}

}  // namespace

bool value_equal(const Value& a, const Value& b) {
  const auto empty_list = [](const Value& v) {
    if (const auto* i = std::get_if<IntList>(&v)) return i->empty();
    if (const auto* f = std::get_if<FloatList>(&v)) return f->empty();
    return false;
  };
  if (empty_list(a) && empty_list(b)) return true;
  return a == b;
}

Value integer(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return std::to_string(v);
  return static_cast<std::int64_t>(v);
}

IntList integers(const std::vector<std::uint64_t>& v) {
  IntList out;
  out.reserve(v.size());
  for (std::uint64_t x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

const Value* Section::find(std::string_view key) const {
  for (const Entry& e : stats) {
    if (e.key == key) return &e.value;
  }
  return nullptr;
}

Section& Report::add_section(std::string name) {
  sections.push_back({std::move(name), {}});
  return sections.back();
}

const Section* Report::find(std::string_view name) const {
  for (const Section& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool operator==(const Report& a, const Report& b) {
  if (a.command != b.command || a.sections.size() != b.sections.size()) return false;
  if (!entries_equal(a.config, b.config) || !entries_equal(a.metadata, b.metadata)) return false;
  for (std::size_t i = 0; i < a.sections.size(); ++i) {
    if (a.sections[i].name != b.sections[i].name || !entries_equal(a.sections[i].stats, b.sections[i].stats)) {
      return false;
    }
  }
  return true;
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "table") return Format::kTable;
  throw DomainError("unknown format '" + std::string(s) + "' (json, csv, table)");
}

std::string to_json(const Report& r) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["config"] = entries_json(r.config);
  Json sections = Json::array();
  for (const Section& s : r.sections) {
    Json o = Json::object();
    o["name"] = s.name;
    o["statistics"] = entries_json(s.stats);
    sections.push_back(std::move(o));
  }
  j["sections"] = std::move(sections);
  j["metadata"] = entries_json(r.metadata);
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "section,statistic,value\n";
  const auto rows = [&](const std::string& section, const Entries& entries) {
    for (const Entry& e : entries) {
      out << csv_field(section) << "," << csv_field(e.key) << "," << csv_field(plain(e.value)) << "\n";
    }
  };
  rows("config", r.config);
  for (const Section& s : r.sections) rows(s.name, s.stats);
  rows("metadata", r.metadata);
  return out.str();
}

std::string to_table(const Report& r) {
  std::ostringstream out;
  out << r.command << "\n";
  table_block(out, "config", r.config);
  for (const Section& s : r.sections) table_block(out, s.name, s.stats);
  table_block(out, "metadata", r.metadata);
  return out.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::kJson: return to_json(r);
    case Format::kCsv: return to_csv(r);
    case Format::kTable: return to_table(r);
  }
  return {};
}

Report from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion) {
    malformed("unsupported schema_version");
  }
  if (!j.contains("command") || !j["command"].is_string()) malformed("missing command");
  Report r;
  r.command = j["command"].get<std::string>();
  r.config = entries_from(j.value("config", Json::object()), "config");
  r.metadata = entries_from(j.value("metadata", Json::object()), "metadata");
  const Json sections = j.value("sections", Json::array());
  if (!sections.is_array()) malformed("sections must be an array");
  for (const Json& s : sections) {
    if (!s.is_object() || !s.contains("name") || !s["name"].is_string()) malformed("section without a name");
    Section& out = r.add_section(s["name"].get<std::string>());
    out.stats = entries_from(s.value("statistics", Json::object()), "sections." + out.name);
  }
  return r;
}

}  // namespace ecavg::report
