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

#include "report/builders.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "analytics/analytics.hpp"
#include "collision/collision.hpp"
#include "curve/long_model.hpp"
#include "densities/densities.hpp"
#include "numth/integer.hpp"
#include "numth/parallel.hpp"
#include "numth/sieve.hpp"
#include "survey/class_table.hpp"
#include "survey/sato_tate.hpp"

namespace ecavg::report {

namespace {

using numth::CongruenceClass;

Real real(const densities::BoundedReal& b) { return Real{b.decimal, b.value, b.error_bound}; }

Fraction fraction(const numth::ExactRational& q) { return Fraction{q.str()}; }

std::string fixed5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::string m_key(const std::string& prefix, std::uint64_t m) { return prefix + "_m" + std::to_string(m); }

std::vector<CongruenceClass> classes_for(std::uint64_t n, const std::optional<std::int64_t>& k) {
  if (n == 0) throw DomainError("n must be positive");
  if (k) return {CongruenceClass(n, *k)};
  return numth::unit_classes(n);
}

void check_m_list(const std::vector<std::uint64_t>& m_list) {
  for (std::uint64_t m : m_list) {
    if (m == 0) throw DomainError("m must be positive");
  }
}

Report table1(int precision) {
  Report r;
  r.command = "densities";
  r.config = {{"table", std::int64_t{1}}, {"precision", std::int64_t{precision}}};
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    Section& s = r.add_section("p=" + std::to_string(p));
    const auto one = densities::cyclic_density_ap({CongruenceClass(p, 1), 1, precision});
    const auto other = densities::cyclic_density_ap({CongruenceClass(p, -1), 1, precision});
    s.add("k=1", real(one.scaled));
    s.add("k!=1", real(other.scaled));
    s.add("k=1_5dp", fixed5(one.scaled.value));
    s.add("k!=1_5dp", fixed5(other.scaled.value));
  }
  r.metadata = {{"statistic", std::string("phi(n) * C^C_{n,k}, n = p")}};
  return r;
}

Report table2(int precision) {
  Report r;
  r.command = "densities";
  r.config = {{"table", std::int64_t{2}}, {"precision", std::int64_t{precision}}};
  for (const auto& [p, q] : table2_columns()) {
    Section& s = r.add_section("p=" + std::to_string(p) + " q=" + std::to_string(q));
    const std::uint64_t n = p * q;
    for (bool one_p : {true, false}) {
      for (bool one_q : {true, false}) {
        std::uint64_t k = 1;
        while ((k % p == 1) != one_p || (k % q == 1) != one_q || std::gcd(k, n) != 1) ++k;
        const auto d = densities::cyclic_density_ap({CongruenceClass(n, static_cast<std::int64_t>(k)), 1, precision});
        const std::string key = std::string(one_p ? "1" : "!1") + "," + (one_q ? "1" : "!1");
        s.add(key, real(d.scaled));
        s.add(key + "_5dp", fixed5(d.scaled.value));
      }
    }
  }
  r.metadata = {{"statistic", std::string("phi(pq) * C^C_{pq,k}; keys give k mod p, k mod q")}};
  return r;
}

Report table3() {
  Report r;
  r.command = "densities";
  r.config = {{"table", std::int64_t{3}}, {"m", integers(table3_columns())}};
  for (const auto& [n, k] : table3_rows()) {
    Section& s = r.add_section("n=" + std::to_string(n) + " k=" + std::to_string(k));
    for (std::uint64_t m : table3_columns()) {
      s.add("m=" + std::to_string(m), fraction(densities::divisibility_density_ap({CongruenceClass(n, k), m, 10})));
    }
  }
  r.metadata = {{"statistic", std::string("C^D(m)_{n,k}")}};
  return r;
}

}  // namespace

const std::vector<std::pair<std::uint64_t, std::int64_t>>& table3_rows() {
  static const std::vector<std::pair<std::uint64_t, std::int64_t>> rows = {
      {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3},
      {5, 4}, {6, 1}, {6, 5}, {8, 1}, {8, 3}, {8, 5}, {8, 7}};
  return rows;
}

const std::vector<std::uint64_t>& table3_columns() {
  static const std::vector<std::uint64_t> cols = {2, 3, 4, 5, 6, 8};
  return cols;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& table2_columns() {
  static const std::vector<std::pair<std::uint64_t, std::uint64_t>> cols = {
      {3, 5}, {3, 7}, {3, 11}, {5, 7}, {5, 11}, {7, 11}};
  return cols;
}

Report densities_report(const DensitiesArgs& args) {
  if (args.precision < densities::kMinPrecision || args.precision > densities::kMaxPrecision) {
    throw DomainError("precision must lie in [" + std::to_string(densities::kMinPrecision) + ", " +
                      std::to_string(densities::kMaxPrecision) + "]");
  }
  switch (args.table) {
    case 0: break;
    case 1: return table1(args.precision);
    case 2: return table2(args.precision);
    case 3: return table3();
    default: throw DomainError("table must be 1, 2 or 3");
  }
  check_m_list(args.m_list);
  const auto classes = classes_for(args.n, args.k);

  Report r;
  r.command = "densities";
  r.config = {{"kind", args.kind}, {"n", integer(args.n)}, {"precision", std::int64_t{args.precision}}};
  if (args.k) r.config.push_back({"k", *args.k});
  if (args.kind == "cyclic") {
    Section& g = r.add_section("global");
    g.add("C^C", real(densities::cyclic_density_global(args.precision)));
    for (const CongruenceClass& cc : classes) {
      const auto d = densities::cyclic_density_ap({cc, 1, args.precision});
      Section& s = r.add_section(cc.str());
      s.add("finite_part", fraction(d.finite_part));
      s.add("euler_part", real(d.euler_part));
      s.add("value", real(d.value));
      s.add("scaled", real(d.scaled));
    }
  } else if (args.kind == "divisibility") {
    if (args.m_list.empty()) throw DomainError("divisibility densities need at least one --m");
    r.config.push_back({"m", integers(args.m_list)});
    Section& g = r.add_section("global");
    for (std::uint64_t m : args.m_list) {
      g.add("m=" + std::to_string(m), fraction(densities::divisibility_density_global(m)));
    }
    for (const CongruenceClass& cc : classes) {
      Section& s = r.add_section(cc.str());
      for (std::uint64_t m : args.m_list) {
        s.add("m=" + std::to_string(m), fraction(densities::divisibility_density_ap({cc, m, args.precision})));
      }
    }
  } else {
    throw DomainError("kind must be cyclic or divisibility");
  }
  return r;
}

Report curve_report(const CurveArgs& args) {
  check_m_list(args.m_list);
  const curve::LongModel model = curve::LongModel::parse(args.coeffs);
  const auto classes = classes_for(args.n, args.k);

  Report r;
  r.command = "curve";
  r.config = {{"coeffs", model.str()}, {"x", args.x}, {"n", integer(args.n)}, {"m", integers(args.m_list)}};
  if (args.k) r.config.push_back({"k", *args.k});
  bool probabilistic = false;
  for (const CongruenceClass& cc : classes) {
    const curve::CensusResult c = curve::individual_census(model, args.x, cc, args.m_list);
    probabilistic = probabilistic || c.probabilistic;
    Section& s = r.add_section(cc.str());
    s.add("good_primes", integer(c.good_primes.size()));
    s.add("cyclic", integer(c.cyclic));
    for (std::size_t i = 0; i < args.m_list.size(); ++i) {
      s.add(m_key("divisible", args.m_list[i]), integer(c.divisible[i]));
    }
    IntList bad(c.bad_primes.begin(), c.bad_primes.end());
    s.add("bad_primes", std::move(bad));
  }
  r.metadata = {{"good_prime_rule", std::string("4*c4^3 != c6^2 modulo p (reduced discriminant nonzero)")},
                {"probabilistic", probabilistic}};
  return r;
}

Report classcount_report(const ClassCountArgs& args) {
  check_m_list(args.m_list);
  std::vector<std::uint32_t> primes;
  if (args.p) {
    if (args.pmax) throw DomainError("give either p or pmax, not both");
    if (args.p <= 3 || !numth::is_prime(args.p)) throw DomainError("p must be a prime greater than 3");
    primes.push_back(static_cast<std::uint32_t>(args.p));
  } else {
    if (args.pmax < 5) throw DomainError("pmax must be at least 5");
    for (std::uint32_t p : numth::primes_up_to(args.pmax)) {
      if (p > 3) primes.push_back(p);
    }
  }
  std::vector<survey::ClassCounts> counts(primes.size());
  numth::parallel_for(primes.size(), args.threads,
                      [&](std::size_t i) { counts[i] = survey::class_counts(primes[i], args.m_list); });

  Report r;
  r.command = "classcount";
  r.config = {{"m", integers(args.m_list)}};
  if (args.p) r.config.push_back({"p", integer(args.p)});
  else r.config.push_back({"pmax", integer(args.pmax)});
  double worst_c = 0;
  std::vector<double> worst_d(args.m_list.size(), 0);
  for (const survey::ClassCounts& c : counts) {
    const double p = static_cast<double>(c.p);
    const double p2 = p * p;
    const double p32 = p * std::sqrt(p);
    Section& s = r.add_section("p=" + std::to_string(c.p));
    s.add("valid_pairs", integer(c.valid_pairs));
    s.add("cyclic", integer(c.cyclic));
    const double pc = densities::vartheta(c.p).to_double() * p2;
    const double ratio_c = std::fabs(static_cast<double>(c.cyclic) - pc) / p32;
    worst_c = std::max(worst_c, ratio_c);
    s.add("predicted_cyclic", pc);
    s.add("cyclic_error_over_p^1.5", ratio_c);
    for (std::size_t i = 0; i < args.m_list.size(); ++i) {
      const std::uint64_t m = args.m_list[i];
      s.add(m_key("divisible", m), integer(c.divisible[i]));
      if (std::gcd<std::uint64_t>(c.p, m) != 1) continue;
      const double pd = densities::omega_r(static_cast<std::int64_t>(c.p), m).to_double() * p2;
      const double ratio_d = std::fabs(static_cast<double>(c.divisible[i]) - pd) / (static_cast<double>(m) * p32);
      worst_d[i] = std::max(worst_d[i], ratio_d);
      s.add(m_key("predicted", m), pd);
      s.add(m_key("error_over_m_p^1.5", m), ratio_d);
    }
  }
  r.metadata = {{"pairs", std::string("(a, b) in F_p^* x F_p^* with 4a^3 + 27b^2 != 0")},
                {"max_cyclic_error_over_p^1.5", worst_c}};
  for (std::size_t i = 0; i < args.m_list.size(); ++i) {
    r.metadata.push_back({m_key("max_error_over_m_p^1.5", args.m_list[i]), worst_d[i]});
  }
  return r;
}

namespace {

Entries survey_config(const survey::SurveyConfig& c, bool with_m) {
  Entries e = {{"x", c.x}, {"A", integer(c.A)}, {"B", integer(c.B)}, {"n", integer(c.n)}};
  if (with_m) e.push_back({"m", integers(c.m_list)});
  e.push_back({"mode", survey::mode_name(c.mode)});
  if (c.mode == survey::Mode::kSampled) {
    e.push_back({"samples", integer(c.sample_count)});
    e.push_back({"seed", integer(c.seed)});
    e.push_back({"bsgs", c.use_bsgs});
  }
  e.push_back({"bins", std::int64_t{c.angle_bins}});
  return e;
}

}  // namespace

Report survey_report(const survey::SurveyConfig& config) {
  const survey::SurveyReport s = survey::family_survey(config);
  const bool sampled = config.mode == survey::Mode::kSampled;
  Report r;
  r.command = "survey";
  r.config = survey_config(config, true);
  for (const survey::ClassStats& c : s.classes) {
    Section& sec = r.add_section(c.cc.str());
    sec.add("primes", integer(c.primes));
    sec.add("pairs", integer(c.pairs));
    sec.add("cyclic", integer(c.cyclic));
    if (sampled) {
      sec.add("pairs_estimate", c.pairs_estimate);
      sec.add("cyclic_estimate", c.cyclic_estimate);
      sec.add("cyclic_se", c.cyclic_se);
    }
    sec.add("predicted_cyclic", c.predicted_cyclic);
    sec.add("cyclic_ratio", c.cyclic_ratio);
    for (std::size_t i = 0; i < config.m_list.size(); ++i) {
      const std::uint64_t m = config.m_list[i];
      sec.add(m_key("divisible", m), integer(c.divisible[i]));
      if (sampled) {
        sec.add(m_key("divisible_estimate", m), c.divisible_estimate[i]);
        sec.add(m_key("divisible_se", m), c.divisible_se[i]);
      }
      sec.add(m_key("predicted_divisible", m), c.predicted_divisible[i]);
      sec.add(m_key("divisible_ratio", m), c.divisible_ratio[i]);
    }
    sec.add("angle_histogram", integers(c.angle_histogram));
    sec.add("st_masses", c.st_masses);
    sec.add("total_variation", c.total_variation);
  }
  r.metadata = {{"effective_epsilon", s.effective_epsilon}, {"probabilistic", s.probabilistic}};
  if (sampled) {
    r.metadata.push_back({"estimate_scale", 4.0 * static_cast<double>(config.A) * static_cast<double>(config.B) /
                                                static_cast<double>(config.sample_count)});
  }
  return r;
}

Report satotate_report(const survey::SurveyConfig& config) {
  const survey::SatoTateReport s = survey::sato_tate_survey(config);
  Report r;
  r.command = "satotate";
  r.config = survey_config(config, false);
  for (const survey::SatoTateClass& c : s.classes) {
    Section& sec = r.add_section(c.cc.str());
    sec.add("samples", integer(c.samples));
    sec.add("histogram", integers(c.histogram));
    sec.add("masses", c.masses);
    sec.add("total_variation", c.total_variation);
  }
  r.metadata = {{"max_total_variation", s.max_total_variation}};
  return r;
}

Report primesums_report(const PrimeSumArgs& args) {
  check_m_list(args.m_list);
  const auto classes = classes_for(args.n, args.k);
  Report r;
  r.command = "primesums";
  r.config = {{"x", args.x}, {"n", integer(args.n)}, {"m", integers(args.m_list)}};
  if (args.k) r.config.push_back({"k", *args.k});
  for (const CongruenceClass& cc : classes) {
    Section& s = r.add_section(cc.str());
    const analytics::PrimeSumResult c = analytics::cyclic_prime_sum(args.x, cc);
    s.add("primes", integer(c.terms));
    s.add("vartheta_sum", fraction(c.exact_sum));
    s.add("vartheta_sum_value", c.exact_sum.to_double());
    s.add("predicted_cyclic", real(c.predicted));
    s.add("cyclic_relative_gap", c.relative_gap);
    for (std::uint64_t m : args.m_list) {
      const analytics::PrimeSumResult d = analytics::divisibility_prime_sum(args.x, cc, m);
      s.add(m_key("omega_sum", m), fraction(d.exact_sum));
      s.add(m_key("omega_sum_value", m), d.exact_sum.to_double());
      s.add(m_key("predicted_divisible", m), real(d.predicted));
      s.add(m_key("relative_gap", m), d.relative_gap);
    }
    if (args.identity) {
      const analytics::TnkCheck t = analytics::tnk_identity_check(args.x, cc);
      s.add("tnk_identity", t.equal);
      s.add("tnk_divisors", integer(t.divisors));
    }
  }
  r.metadata = {{"predicted", std::string("li(x) * C_{n,k}")}};
  return r;
}

Report collisions_report(const CollisionArgs& args) {
  const collision::CollisionSearch c = collision::collision_search(args.bound, args.threads);
  Report r;
  r.command = "collisions";
  r.config = {{"bound", integer(args.bound)}};
  Section& s = r.add_section("summary");
  s.add("squarefree_count", integer(c.squarefree_count));
  s.add("distinct_values", integer(c.distinct_values));
  s.add("collisions", integer(c.collisions.size()));
  if (c.collisions.empty()) s.add("result", "no collisions <= " + std::to_string(args.bound));
  for (const collision::CollisionRecord& rec : c.collisions) {
    Section& e = r.add_section("N=" + std::to_string(rec.N) + " M=" + std::to_string(rec.M));
    e.add("N", integer(rec.N));
    e.add("M", integer(rec.M));
    e.add("h", fraction(rec.shared_h));
  }
  return r;
}

}  // namespace ecavg::report
