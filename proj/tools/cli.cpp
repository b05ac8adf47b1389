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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>

#include "CLI11.hpp"
#include "ecavg/ecavg.h"

namespace ecavg::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 0;
};

struct Flags {
  Common common;
  double x = 0;
  std::uint64_t A = 0, B = 0, n = 1;
  std::int64_t k = 1;
  std::vector<std::uint64_t> m;
  std::string mode = "exact";
  std::uint64_t samples = 0, seed = 0, bound = 0, pmax = 0, p = 0;
  std::string coeffs;
  int table = 0;
  std::string kind = "cyclic";
  int precision = 10;
  unsigned bins = 16;
  bool bsgs = false;
  bool no_identity = false;
};

using Report = std::unique_ptr<ecavg_report, decltype(&ecavg_report_free)>;
using String = std::unique_ptr<char, decltype(&ecavg_string_free)>;

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "write the report here instead of standard output");
  sub->add_option("--threads", c.threads, "worker cap (0: all available)")->capture_default_str();
}

ecavg_format format_of(const std::string& s) {
  if (s == "csv") return ECAVG_FORMAT_CSV;
  if (s == "table") return ECAVG_FORMAT_TABLE;
  return ECAVG_FORMAT_JSON;
}

int report_error(ecavg_status s, std::ostream& out, std::ostream& err) {
  String json(ecavg_error_json(s), &ecavg_string_free);
  if (json) out << json.get();
  err << "error: " << ecavg_last_error() << "\n";
  return s == ECAVG_ERR_USAGE ? kExitUsage : kExitDomain;
}

int write_report(const ecavg_report* r, const Common& c, std::ostream& out, std::ostream& err) {
  char* text = nullptr;
  const ecavg_status s = ecavg_report_render(r, format_of(c.format), &text);
  if (s != ECAVG_OK) return report_error(s, out, err);
  String owned(text, &ecavg_string_free);
  if (c.out_path.empty()) {
    out << text;
    return out ? kExitOk : kExitDomain;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  f << text;
  if (!f) {
    const std::string msg = "cannot write " + c.out_path;
    out << R"({"error":{"status":"io","code":3,"message":)" << '"';
    for (char ch : msg) {
      if (ch == '"' || ch == '\\') out << '\\';
      out << ch;
    }
    out << "\"}}\n";
    err << "error: " << msg << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average cyclicity and divisibility densities of elliptic curves in progressions", "ecavg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ecavg_version()));
  Flags f;
  std::function<ecavg_status(ecavg_report**)> action;

  // densities
  auto* dens = app.add_subcommand("densities", "density tables or a single density query");
  add_common(dens, f.common);
  dens->add_option("--table", f.table, "print table 1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
  dens->add_option("--kind", f.kind, "cyclic or divisibility")
      ->check(CLI::IsMember({"cyclic", "divisibility"}))
      ->capture_default_str();
  dens->add_option("--n", f.n, "modulus")->capture_default_str();
  auto* dens_k = dens->add_option("--k", f.k, "residue (every unit class when omitted)");
  dens->add_option("--m", f.m, "divisor m (repeatable)")->delimiter(',');
  dens->add_option("--precision", f.precision, "significant digits")->capture_default_str();
  dens->callback([&] {
    action = [&, dens_k](ecavg_report** r) {
      ecavg_densities_args a;
      ecavg_densities_args_init(&a);
      a.table = f.table;
      a.kind = f.kind.c_str();
      a.n = f.n;
      a.has_k = dens_k->count() > 0;
      a.k = f.k;
      a.m = f.m.data();
      a.m_count = f.m.size();
      a.precision = f.precision;
      return ecavg_run_densities(&a, r);
    };
  });

  // curve
  auto* curve = app.add_subcommand("curve", "census of one curve over primes in a progression");
  add_common(curve, f.common);
  curve->add_option("--coeffs", f.coeffs, "long Weierstrass model a1,a2,a3,a4,a6")->required();
  curve->add_option("--x", f.x, "prime bound")->required();
  curve->add_option("--n", f.n, "modulus")->capture_default_str();
  auto* curve_k = curve->add_option("--k", f.k, "residue (every unit class when omitted)");
  curve->add_option("--m", f.m, "divisor m (repeatable)")->delimiter(',');
  curve->callback([&] {
    action = [&, curve_k](ecavg_report** r) {
      ecavg_curve_args a;
      ecavg_curve_args_init(&a);
      a.coeffs = f.coeffs.c_str();
      a.x = f.x;
      a.n = f.n;
      a.has_k = curve_k->count() > 0;
      a.k = f.k;
      a.m = f.m.data();
      a.m_count = f.m.size();
      return ecavg_run_curve(&a, r);
    };
  });

  // classcount
  auto* cc = app.add_subcommand("classcount", "exact per-prime counts of cyclic and m-divisible curves");
  add_common(cc, f.common);
  auto* cc_p = cc->add_option("--p", f.p, "a single prime");
  auto* cc_pmax = cc->add_option("--pmax", f.pmax, "every prime 3 < p <= pmax");
  cc_p->excludes(cc_pmax);
  cc->add_option("--m", f.m, "divisor m (repeatable)")->delimiter(',');
  cc->callback([&] {
    action = [&](ecavg_report** r) {
      ecavg_classcount_args a;
      ecavg_classcount_args_init(&a);
      a.p = f.p;
      a.pmax = f.pmax;
      a.m = f.m.data();
      a.m_count = f.m.size();
      a.threads = f.common.threads;
      return ecavg_run_classcount(&a, r);
    };
  });

  // survey and satotate
  const auto survey_options = [&](CLI::App* sub, bool with_m) {
    add_common(sub, f.common);
    sub->add_option("--x", f.x, "prime bound")->required();
    sub->add_option("--A", f.A, "|a| <= A")->required();
    sub->add_option("--B", f.B, "|b| <= B")->required();
    sub->add_option("--n", f.n, "modulus")->capture_default_str();
    if (with_m) sub->add_option("--m", f.m, "divisor m (repeatable)")->delimiter(',');
    sub->add_option("--mode", f.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    sub->add_option("--samples", f.samples, "curves drawn in sampled mode");
    sub->add_option("--seed", f.seed, "seed for sampled mode")->capture_default_str();
    sub->add_option("--bins", f.bins, "Frobenius angle bins")->capture_default_str();
    sub->add_flag("--bsgs", f.bsgs, "baby-step giant-step point counts in sampled mode");
  };
  const auto survey_args = [&] {
    ecavg_survey_args a;
    ecavg_survey_args_init(&a);
    a.x = f.x;
    a.A = f.A;
    a.B = f.B;
    a.n = f.n;
    a.m = f.m.data();
    a.m_count = f.m.size();
    a.mode = f.mode.c_str();
    if (f.samples) a.samples = f.samples;
    a.seed = f.seed;
    a.bins = f.bins;
    a.threads = f.common.threads;
    a.bsgs = f.bsgs ? 1 : 0;
    return a;
  };
  auto* survey = app.add_subcommand("survey", "family average over the box |a| <= A, |b| <= B");
  survey_options(survey, true);
  survey->callback([&] {
    action = [&](ecavg_report** r) {
      const ecavg_survey_args a = survey_args();
      return ecavg_run_survey(&a, r);
    };
  });
  auto* st = app.add_subcommand("satotate", "Frobenius angle histograms against the Sato-Tate measure");
  survey_options(st, false);
  st->callback([&] {
    action = [&](ecavg_report** r) {
      const ecavg_survey_args a = survey_args();
      return ecavg_run_satotate(&a, r);
    };
  });

  // primesums
  auto* ps = app.add_subcommand("primesums", "exact prime sums against their li(x) main terms");
  add_common(ps, f.common);
  ps->add_option("--x", f.x, "prime bound")->required();
  ps->add_option("--n", f.n, "modulus")->capture_default_str();
  auto* ps_k = ps->add_option("--k", f.k, "residue (every unit class when omitted)");
  ps->add_option("--m", f.m, "divisor m (repeatable)")->delimiter(',');
  ps->add_flag("--no-identity", f.no_identity, "skip the exact T_{n,k} identity check");
  ps->callback([&] {
    action = [&, ps_k](ecavg_report** r) {
      ecavg_primesums_args a;
      ecavg_primesums_args_init(&a);
      a.x = f.x;
      a.n = f.n;
      a.has_k = ps_k->count() > 0;
      a.k = f.k;
      a.m = f.m.data();
      a.m_count = f.m.size();
      a.identity = f.no_identity ? 0 : 1;
      return ecavg_run_primesums(&a, r);
    };
  });

  // collisions
  auto* col = app.add_subcommand("collisions", "search for h(N) = h(M) among squarefree integers");
  add_common(col, f.common);
  col->add_option("--bound", f.bound, "search bound")->required();
  col->callback([&] {
    action = [&](ecavg_report** r) {
      ecavg_collisions_args a;
      ecavg_collisions_args_init(&a);
      a.bound = f.bound;
      a.threads = f.common.threads;
      return ecavg_run_collisions(&a, r);
    };
  });

  std::vector<const char*> argv{"ecavg"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ecavg_report* raw = nullptr;
  const ecavg_status s = action(&raw);
  if (s != ECAVG_OK) return report_error(s, out, err);
  Report report(raw, &ecavg_report_free);
  return write_report(report.get(), f.common, out, err);
}

}  // namespace ecavg::cli
