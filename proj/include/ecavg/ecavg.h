/* Copyright 2026 The ecavg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libecavg: average densities of cyclic reduction and
 * m-divisibility of elliptic curves in arithmetic progressions, and the
 * surveys that check them.
 *
 * Every call returns an ecavg_status. On failure the message is available
 * from ecavg_last_error() on the same thread until the next call. Strings
 * handed out by the library are released with ecavg_string_free, reports
 * with ecavg_report_free. */

#ifndef ECAVG_ECAVG_H
#define ECAVG_ECAVG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ECAVG_BUILDING_LIBRARY)
#define ECAVG_API __attribute__((visibility("default")))
#else
#define ECAVG_API
#endif

typedef enum {
  ECAVG_OK = 0,
  ECAVG_ERR_DOMAIN = 1,   /* argument outside the mathematical domain */
  ECAVG_ERR_USAGE = 2,    /* null pointer or malformed call */
  ECAVG_ERR_IO = 3,
  ECAVG_ERR_INTERNAL = 4
} ecavg_status;

typedef enum { ECAVG_FORMAT_JSON = 0, ECAVG_FORMAT_CSV = 1, ECAVG_FORMAT_TABLE = 2 } ecavg_format;

typedef struct ecavg_report ecavg_report;

ECAVG_API const char* ecavg_version(void);
ECAVG_API const char* ecavg_last_error(void);
ECAVG_API void ecavg_string_free(char* s);

/* Curves y^2 = x^3 + a x + b over F_p, 3 < p < 2^32 prime. */
ECAVG_API ecavg_status ecavg_point_count(uint64_t p, int64_t a, int64_t b, uint64_t* count);
/* E(F_p) = Z/d x Z/e with d | e. */
ECAVG_API ecavg_status ecavg_group_shape(uint64_t p, int64_t a, int64_t b, uint64_t* d, uint64_t* e);
ECAVG_API ecavg_status ecavg_is_cyclic(uint64_t p, int64_t a, int64_t b, int* cyclic);

/* C^C_{n,k} with its rigorous error bound; n = 1 gives the global constant.
 * `decimal` may be null. */
ECAVG_API ecavg_status ecavg_cyclic_density(uint64_t n, int64_t k, int precision, double* value,
                                            double* error_bound, char** decimal);
/* C^D(m)_{n,k} as the reduced fraction "num/den". */
ECAVG_API ecavg_status ecavg_divisibility_density(uint64_t n, int64_t k, uint64_t m, char** fraction);

/* Command runners. Initialize each argument struct with its _init function
 * before filling it in; list fields are borrowed for the call only. */

typedef struct {
  int table; /* 1, 2, 3, or 0 for a query */
  const char* kind; /* "cyclic" or "divisibility" */
  uint64_t n;
  int has_k;
  int64_t k;
  const uint64_t* m;
  size_t m_count;
  int precision;
} ecavg_densities_args;

typedef struct {
  const char* coeffs; /* "a1,a2,a3,a4,a6" */
  double x;
  uint64_t n;
  int has_k;
  int64_t k;
  const uint64_t* m;
  size_t m_count;
} ecavg_curve_args;

typedef struct {
  uint64_t p;    /* one prime, or */
  uint64_t pmax; /* all primes 3 < p <= pmax */
  const uint64_t* m;
  size_t m_count;
  unsigned threads;
} ecavg_classcount_args;

/* Shared by survey and satotate; satotate ignores m. */
typedef struct {
  double x;
  uint64_t A, B, n;
  const uint64_t* m;
  size_t m_count;
  const char* mode; /* "exact" or "sampled" */
  uint64_t samples;
  uint64_t seed;
  unsigned bins;
  unsigned threads; /* 0: all available */
  int bsgs;
} ecavg_survey_args;

typedef struct {
  double x;
  uint64_t n;
  int has_k;
  int64_t k;
  const uint64_t* m;
  size_t m_count;
  int identity; /* also check the exact T_{n,k} identity */
} ecavg_primesums_args;

typedef struct {
  uint64_t bound;
  unsigned threads;
} ecavg_collisions_args;

ECAVG_API void ecavg_densities_args_init(ecavg_densities_args* args);
ECAVG_API void ecavg_curve_args_init(ecavg_curve_args* args);
ECAVG_API void ecavg_classcount_args_init(ecavg_classcount_args* args);
ECAVG_API void ecavg_survey_args_init(ecavg_survey_args* args);
ECAVG_API void ecavg_primesums_args_init(ecavg_primesums_args* args);
ECAVG_API void ecavg_collisions_args_init(ecavg_collisions_args* args);

ECAVG_API ecavg_status ecavg_run_densities(const ecavg_densities_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_curve(const ecavg_curve_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_classcount(const ecavg_classcount_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_survey(const ecavg_survey_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_satotate(const ecavg_survey_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_primesums(const ecavg_primesums_args* args, ecavg_report** out);
ECAVG_API ecavg_status ecavg_run_collisions(const ecavg_collisions_args* args, ecavg_report** out);

ECAVG_API ecavg_status ecavg_report_render(const ecavg_report* report, ecavg_format format, char** out);
ECAVG_API ecavg_status ecavg_report_parse_json(const char* json, ecavg_report** out);
/* 1 when equal, 0 otherwise (including null arguments). */
ECAVG_API int ecavg_report_equal(const ecavg_report* a, const ecavg_report* b);
ECAVG_API const char* ecavg_report_command(const ecavg_report* report);
ECAVG_API size_t ecavg_report_section_count(const ecavg_report* report);
ECAVG_API void ecavg_report_free(ecavg_report* report);

/* Error object {"error": {"status": ..., "message": ...}} for the last
 * failure on this thread. */
ECAVG_API char* ecavg_error_json(ecavg_status status);

#ifdef __cplusplus
}
#endif

#endif /* ECAVG_ECAVG_H */
