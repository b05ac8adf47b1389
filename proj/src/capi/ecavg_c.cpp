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

#include "ecavg/ecavg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "curve/curve.hpp"
#include "densities/densities.hpp"
#include "numth/integer.hpp"
#include "report/builders.hpp"
#include "report/report.hpp"

struct ecavg_report {
  ecavg::report::Report report;
};

namespace {

thread_local std::string last_error;

ecavg_status fail(ecavg_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
ecavg_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return ECAVG_OK;
  } catch (const std::invalid_argument& e) {  // DomainError and its kin
    return fail(ECAVG_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ECAVG_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ECAVG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ECAVG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ECAVG_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::uint64_t> list(const std::uint64_t* m, std::size_t count) {
  if (count && !m) throw ecavg::DomainError("m list is null");
  return std::vector<std::uint64_t>(m, m + count);
}

std::optional<std::int64_t> optional_k(int has_k, std::int64_t k) {
  if (has_k) return k;
  return std::nullopt;
}

ecavg_status emit(ecavg::report::Report r, ecavg_report** out) {
  *out = new ecavg_report{std::move(r)};
  return ECAVG_OK;
}

ecavg::survey::SurveyConfig survey_config(const ecavg_survey_args& a) {
  ecavg::survey::SurveyConfig c;
  c.x = a.x;
  c.A = a.A;
  c.B = a.B;
  c.n = a.n;
  c.m_list = list(a.m, a.m_count);
  c.mode = ecavg::survey::parse_mode(a.mode ? a.mode : "");
  c.sample_count = a.samples;
  c.seed = a.seed;
  c.angle_bins = a.bins;
  c.threads = a.threads;
  c.use_bsgs = a.bsgs != 0;
  return c;
}

#define ECAVG_REQUIRE(cond)                                              \
  do {                                                                   \
    if (!(cond)) return fail(ECAVG_ERR_USAGE, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* ecavg_version(void) { return "1.0.0"; }

const char* ecavg_last_error(void) { return last_error.c_str(); }

void ecavg_string_free(char* s) { std::free(s); }

ecavg_status ecavg_point_count(uint64_t p, int64_t a, int64_t b, uint64_t* count) {
  ECAVG_REQUIRE(count);
  return guarded([&] { *count = ecavg::curve::point_count(ecavg::curve::CurveModP(p, a, b)); });
}

ecavg_status ecavg_group_shape(uint64_t p, int64_t a, int64_t b, uint64_t* d, uint64_t* e) {
  ECAVG_REQUIRE(d && e);
  return guarded([&] {
    const auto shape = ecavg::curve::group_shape(ecavg::curve::CurveModP(p, a, b));
    *d = shape.d;
    *e = shape.e;
  });
}

ecavg_status ecavg_is_cyclic(uint64_t p, int64_t a, int64_t b, int* cyclic) {
  ECAVG_REQUIRE(cyclic);
  return guarded([&] { *cyclic = ecavg::curve::is_cyclic(ecavg::curve::CurveModP(p, a, b)) ? 1 : 0; });
}

ecavg_status ecavg_cyclic_density(uint64_t n, int64_t k, int precision, double* value, double* error_bound,
                                  char** decimal) {
  ECAVG_REQUIRE(value && error_bound);
  return guarded([&] {
    const ecavg::densities::DensityQuery q{ecavg::numth::CongruenceClass(n, k), 1, precision};
    q.validate();
    const auto d = n == 1 ? ecavg::densities::cyclic_density_global(precision)
                          : ecavg::densities::cyclic_density_ap(q).value;
    *value = d.value;
    *error_bound = d.error_bound;
    if (decimal) *decimal = copy_string(d.decimal);
  });
}

ecavg_status ecavg_divisibility_density(uint64_t n, int64_t k, uint64_t m, char** fraction) {
  ECAVG_REQUIRE(fraction);
  return guarded([&] {
    const auto q = ecavg::densities::divisibility_density_ap({ecavg::numth::CongruenceClass(n, k), m, 10});
    *fraction = copy_string(q.str());
  });
}

void ecavg_densities_args_init(ecavg_densities_args* a) {
  if (!a) return;
  *a = {};
  a->kind = "cyclic";
  a->n = 1;
  a->precision = 10;
}

void ecavg_curve_args_init(ecavg_curve_args* a) {
  if (!a) return;
  *a = {};
  a->x = 1e4;
  a->n = 1;
}

void ecavg_classcount_args_init(ecavg_classcount_args* a) {
  if (a) *a = {};
}

void ecavg_survey_args_init(ecavg_survey_args* a) {
  if (!a) return;
  const ecavg::survey::SurveyConfig defaults;
  *a = {};
  a->x = defaults.x;
  a->A = defaults.A;
  a->B = defaults.B;
  a->n = defaults.n;
  a->mode = "exact";
  a->samples = defaults.sample_count;
  a->seed = defaults.seed;
  a->bins = defaults.angle_bins;
}

void ecavg_primesums_args_init(ecavg_primesums_args* a) {
  if (!a) return;
  *a = {};
  a->x = 1e4;
  a->n = 1;
  a->identity = 1;
}

void ecavg_collisions_args_init(ecavg_collisions_args* a) {
  if (!a) return;
  *a = {};
  a->bound = 10000;
}

ecavg_status ecavg_run_densities(const ecavg_densities_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] {
    ecavg::report::DensitiesArgs args;
    args.table = a->table;
    args.kind = a->kind ? a->kind : "cyclic";
    args.n = a->n;
    args.k = optional_k(a->has_k, a->k);
    args.m_list = list(a->m, a->m_count);
    args.precision = a->precision;
    emit(ecavg::report::densities_report(args), out);
  });
}

ecavg_status ecavg_run_curve(const ecavg_curve_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out && a->coeffs);
  return guarded([&] {
    ecavg::report::CurveArgs args;
    args.coeffs = a->coeffs;
    args.x = a->x;
    args.n = a->n;
    args.k = optional_k(a->has_k, a->k);
    args.m_list = list(a->m, a->m_count);
    emit(ecavg::report::curve_report(args), out);
  });
}

ecavg_status ecavg_run_classcount(const ecavg_classcount_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] {
    ecavg::report::ClassCountArgs args;
    args.p = a->p;
    args.pmax = a->pmax;
    args.m_list = list(a->m, a->m_count);
    args.threads = a->threads;
    emit(ecavg::report::classcount_report(args), out);
  });
}

ecavg_status ecavg_run_survey(const ecavg_survey_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] { emit(ecavg::report::survey_report(survey_config(*a)), out); });
}

ecavg_status ecavg_run_satotate(const ecavg_survey_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] { emit(ecavg::report::satotate_report(survey_config(*a)), out); });
}

ecavg_status ecavg_run_primesums(const ecavg_primesums_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] {
    ecavg::report::PrimeSumArgs args;
    args.x = a->x;
    args.n = a->n;
    args.k = optional_k(a->has_k, a->k);
    args.m_list = list(a->m, a->m_count);
    args.identity = a->identity != 0;
    emit(ecavg::report::primesums_report(args), out);
  });
}

ecavg_status ecavg_run_collisions(const ecavg_collisions_args* a, ecavg_report** out) {
  ECAVG_REQUIRE(a && out);
  return guarded([&] {
    ecavg::report::CollisionArgs args;
    args.bound = a->bound;
    args.threads = a->threads;
    emit(ecavg::report::collisions_report(args), out);
  });
}

ecavg_status ecavg_report_render(const ecavg_report* report, ecavg_format format, char** out) {
  ECAVG_REQUIRE(report && out);
  if (format != ECAVG_FORMAT_JSON && format != ECAVG_FORMAT_CSV && format != ECAVG_FORMAT_TABLE) {
    return fail(ECAVG_ERR_USAGE, "unknown format");
  }
  return guarded([&] {
    const auto f = format == ECAVG_FORMAT_JSON  ? ecavg::report::Format::kJson
                   : format == ECAVG_FORMAT_CSV ? ecavg::report::Format::kCsv
                                                : ecavg::report::Format::kTable;
    *out = copy_string(ecavg::report::render(report->report, f));
  });
}

ecavg_status ecavg_report_parse_json(const char* json, ecavg_report** out) {
  ECAVG_REQUIRE(json && out);
  return guarded([&] { emit(ecavg::report::from_json(json), out); });
}

int ecavg_report_equal(const ecavg_report* a, const ecavg_report* b) {
  if (!a || !b) return 0;
  return a->report == b->report ? 1 : 0;
}

const char* ecavg_report_command(const ecavg_report* report) {
  return report ? report->report.command.c_str() : nullptr;
}

size_t ecavg_report_section_count(const ecavg_report* report) {
  return report ? report->report.sections.size() : 0;
}

void ecavg_report_free(ecavg_report* report) { delete report; }

char* ecavg_error_json(ecavg_status status) {
  static const char* const names[] = {"ok", "domain", "usage", "io", "internal"};
  const int i = static_cast<int>(status);
  nlohmann::ordered_json j;
  j["error"]["status"] = (i >= 0 && i <= 4) ? names[i] : "internal";
  j["error"]["code"] = i;
  j["error"]["message"] = last_error;
  try {
    return copy_string(j.dump() + "\n");
  } catch (...) {
    return nullptr;
  }
}

}  // extern "C"
