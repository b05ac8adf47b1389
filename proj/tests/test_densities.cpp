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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>

#include "densities/densities.hpp"
#include "densities/euler_product.hpp"
#include "numth/integer.hpp"
#include "oracles.hpp"
#include "report/builders.hpp"

using namespace ecavg;
using densities::DensityQuery;
using numth::CongruenceClass;
using numth::ExactRational;

namespace {

ExactRational g_oracle(std::uint64_t d) {
  ExactRational g(1);
  for (const auto& [q, e] : oracle::trial_factor(d)) {
    if (e > 1) return ExactRational(0);
    g *= ExactRational(-1, static_cast<long>(q * (q * q - 1)));
  }
  return g;
}

// Sieve of primes for the oracles below.
std::vector<std::uint64_t> sieve(std::uint64_t n) {
  std::vector<char> c(n + 1, 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!c[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) c[j] = 0;
  }
  return out;
}

// prod (1 - 1/((l-1) l (l^2-1))) over primes l <= 2e6 not dividing n, in
// long double; the omitted tail is below 1e-19.
long double euler_oracle(std::uint64_t n) {
  static const std::vector<std::uint64_t> primes = sieve(2000000);
  long double prod = 1;
  for (std::uint64_t l : primes) {
    if (n % l == 0) continue;
    const long double L = static_cast<long double>(l);
    prod *= 1 - 1 / ((L - 1) * L * (L * L - 1));
  }
  return prod;
}

// C^C_{n,k} as the absolutely convergent series
//   sum over squarefree d of g(d) [gcd(n, d) | k - 1] / phi(lcm(n, d)),
// counting primes p = k (n) with d | p - 1 by their density.
double cyclic_series_oracle(std::uint64_t n, std::uint64_t k, std::uint64_t D) {
  long double s = 0;
  for (std::uint64_t d = 1; d <= D; ++d) {
    const std::uint64_t g = std::gcd(n, d);
    if ((k - 1) % g != 0) continue;
    const ExactRational gd = g_oracle(d);
    if (gd.is_zero()) continue;
    const std::uint64_t l = n / g * d;
    std::uint64_t ph = l;
    for (const auto& [q, e] : oracle::trial_factor(l)) ph = ph / q * (q - 1);
    s += static_cast<long double>(gd.to_double()) / ph;
  }
  return static_cast<double>(s);
}

ExactRational omega_oracle_cached(std::int64_t r, std::int64_t m) {
  static std::map<std::pair<std::int64_t, std::int64_t>, ExactRational> cache;
  const auto key = std::make_pair(oracle::mod(r, m), m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, oracle::omega_by_matrices(r, m)).first;
  return it->second;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

bool is_power_of_two(std::uint64_t n) { return (n & (n - 1)) == 0; }

}  // namespace

TEST_CASE("underline_m: examples and m_ | m | m_^2 for m <= 10^5") {
  CHECK(densities::underline_m(8).value() == 4);
  CHECK(densities::underline_m(1).value() == 1);
  CHECK(densities::underline_m(12).value() == 6);
  bool ok = true;
  for (std::uint64_t m = 1; m <= 100000; ++m) {
    const std::uint64_t u = densities::underline_m(m).value();
    std::uint64_t want = 1;
    for (const auto& [q, e] : oracle::trial_factor(m)) {
      for (unsigned i = 0; i < (e + 1) / 2; ++i) want *= q;
    }
    ok = ok && u == want && m % u == 0 && (u * u) % m == 0;
  }
  CHECK(ok);
}

TEST_CASE("g_value: examples and multiplicative definition") {
  CHECK(densities::g_value(1) == ExactRational(1));
  CHECK(densities::g_value(2) == ExactRational(-1, 6));
  CHECK(densities::g_value(4) == ExactRational(0));
  CHECK(densities::g_value(6) == ExactRational(1, 144));
  for (std::uint64_t d = 1; d <= 3000; ++d) CHECK(densities::g_value(d) == g_oracle(d));
}

TEST_CASE("omega_r: examples") {
  CHECK(densities::omega_r(1, 2) == ExactRational(2, 3));
  CHECK(densities::omega_r(2, 3) == ExactRational(1, 2));
  CHECK(densities::omega_r(1, 4) == ExactRational(5, 12));
  CHECK(densities::omega_r(5, 1) == ExactRational(1));
  CHECK_THROWS_AS(densities::omega_r(3, 6), DomainError);
  CHECK_THROWS_AS(densities::omega_r(2, 4), DomainError);
  CHECK_THROWS_AS(densities::omega_r(1, 0), DomainError);
}

TEST_CASE("omega_r equals the GL_2(Z/m) Frobenius-class proportion for m <= 12") {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t r = 1; r <= m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      CHECK_MESSAGE(densities::omega_r(r, static_cast<std::uint64_t>(m)) == omega_oracle_cached(r, m),
                    "r = " << r << ", m = " << m);
    }
  }
}

TEST_CASE("omega_r depends only on r mod m_ (m <= 100)") {
  bool ok = true;
  for (std::uint64_t m = 1; m <= 100; ++m) {
    const std::uint64_t u = densities::underline_m(m).value();
    for (std::uint64_t r = 1; r <= u; ++r) {
      if (std::gcd(r, u) != 1) continue;
      const ExactRational w = densities::omega_r(static_cast<std::int64_t>(r), m);
      for (std::uint64_t s = r + u; s <= r + 3 * u; s += u) {
        ok = ok && densities::omega_r(static_cast<std::int64_t>(s), m) == w;
      }
      ok = ok && densities::omega_r(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(u), m) == w;
      ok = ok && w.sign() > 0 && w <= ExactRational(1);
    }
  }
  CHECK(ok);
}

TEST_CASE("vartheta and h_value: examples and product definitions") {
  CHECK(densities::vartheta(2) == ExactRational(1));
  CHECK(densities::vartheta(3) == ExactRational(5, 6));
  CHECK(densities::vartheta(7) == ExactRational(115, 144));
  CHECK_THROWS_AS(densities::vartheta(9), DomainError);
  CHECK(densities::h_value(1) == ExactRational(1));
  CHECK(densities::h_value(2) == ExactRational(5, 6));
  CHECK(densities::h_value(6) == ExactRational(115, 144));
  CHECK_THROWS_AS(densities::h_value(12), DomainError);
  for (std::uint64_t p = 2; p <= 2000; ++p) {
    if (!oracle::is_prime(p)) continue;
    ExactRational want(1);
    for (const auto& [q, e] : oracle::trial_factor(p - 1)) {
      want *= ExactRational(1) - ExactRational(1, static_cast<long>(q * (q * q - 1)));
    }
    CHECK(densities::vartheta(p) == want);
  }
  for (std::uint64_t N = 1; N <= 2000; ++N) {
    if (!oracle::squarefree(N)) continue;
    ExactRational want(1);
    for (const auto& [l, e] : oracle::trial_factor(N)) {
      want *= ExactRational(1) - ExactRational(1, static_cast<long>(l * (l * l - 1)));
    }
    CHECK(densities::h_value(N) == want);
  }
}

TEST_CASE("C^C: reference value, requested precisions, independent product") {
  const auto c = densities::cyclic_density_global(10);
  CHECK(std::fabs(c.value - 0.81375191) <= 1e-7);
  const long double want = euler_oracle(1);
  CHECK(std::fabs(c.value - static_cast<double>(want)) <= 1e-12);
  for (int precision : {4, 7, 10, 15, 20, 30}) {
    const auto d = densities::cyclic_density_global(precision);
    CHECK(d.error_bound < std::pow(10.0, -precision));
    CHECK(std::fabs(d.value - static_cast<double>(want)) <= d.error_bound + 1e-15);
  }
  CHECK(densities::cyclic_density_global(7).decimal.rfind("0.8137519", 0) == 0);
  CHECK(densities::cyclic_density_global(4).decimal.rfind("0.813", 0) == 0);
  const auto ap = densities::cyclic_density_ap({CongruenceClass(1, 1), 1, 10});
  CHECK(ap.value.value == doctest::Approx(c.value).epsilon(1e-15));
  // The 30-digit decimal against a long known expansion.
  CHECK(densities::cyclic_density_global(30).decimal.rfind("0.81375190610681571569749789276", 0) == 0);
  CHECK_THROWS_AS(densities::cyclic_density_global(3), DomainError);
  CHECK_THROWS_AS(densities::cyclic_density_global(31), DomainError);
}

TEST_CASE("cyclic_density_ap: reference examples") {
  const auto s31 = densities::cyclic_density_ap({CongruenceClass(3, 1), 1, 10}).scaled.value;
  const auto s32 = densities::cyclic_density_ap({CongruenceClass(3, 2), 1, 10}).scaled.value;
  const auto s15 = densities::cyclic_density_ap({CongruenceClass(15, 1), 1, 10}).scaled.value;
  CHECK(std::fabs(s31 - 0.79644) <= 5e-6);
  CHECK(std::fabs(s32 - 0.83107) <= 5e-6);
  CHECK(std::fabs(s15 - 0.79145) <= 5e-6);
}

TEST_CASE("cyclic_density_ap agrees with the divisor-sum series oracle (n <= 30)") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (const CongruenceClass& cc : numth::unit_classes(n)) {
      const auto d = densities::cyclic_density_ap({cc, 1, 12});
      const double want = cyclic_series_oracle(n, cc.k(), 20000);
      CHECK_MESSAGE(std::fabs(d.value.value - want) <= 1e-11, cc.str());
      CHECK(std::fabs(d.euler_part.value - static_cast<double>(euler_oracle(n))) <= 1e-12);
    }
  }
}

TEST_CASE("Euler product: bound contains the product for several exclusion sets") {
  const std::vector<std::vector<std::uint64_t>> sets = {{}, {2}, {3, 5}, {2, 3, 5, 7, 11, 13}, {997}, {1009}};
  for (const auto& ex : sets) {
    std::uint64_t n = 1;
    for (std::uint64_t l : ex) n *= l;
    const auto b = densities::cyclic_euler_product(ex, ExactRational(1), 14);
    CHECK(std::fabs(b.value - static_cast<double>(euler_oracle(n))) <= b.error_bound + 2e-16);
  }
}

TEST_CASE("Table 1 values (5 decimals)") {
  const std::map<std::uint64_t, std::pair<double, double>> table = {
      {3, {0.79644, 0.83107}}, {5, {0.80866, 0.81545}}, {7, {0.81173, 0.81415}},
      {11, {0.81320, 0.81381}}, {13, {0.81341, 0.81378}}};
  for (const auto& [p, row] : table) {
    const auto one = densities::cyclic_density_ap({CongruenceClass(p, 1), 1, 10}).scaled.value;
    const auto other = densities::cyclic_density_ap({CongruenceClass(p, -1), 1, 10}).scaled.value;
    CHECK_MESSAGE(std::fabs(one - row.first) <= 1e-5, "p = " << p);
    CHECK_MESSAGE(std::fabs(other - row.second) <= 1e-5, "p = " << p);
    // Every k != 1 shares one value.
    for (const CongruenceClass& cc : numth::unit_classes(p)) {
      if (cc.k() == 1) continue;
      CHECK(densities::cyclic_density_ap({cc, 1, 10}).scaled.value == other);
    }
  }
}

TEST_CASE("Table 2 values (5 decimals)") {
  // Rows: (1, 1), (1, !1), (!1, 1), (!1, !1) for k mod p, k mod q.
  const std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<double>> table = {
      {{3, 5}, {0.79145, 0.79810, 0.82586, 0.83280}},  {{3, 7}, {0.79446, 0.79683, 0.82900, 0.83148}},
      {{3, 11}, {0.79589, 0.79650, 0.83050, 0.83113}}, {{5, 7}, {0.80665, 0.80906, 0.81343, 0.81586}},
      {{5, 11}, {0.80810, 0.80872, 0.81490, 0.81551}}, {{7, 11}, {0.81118, 0.81179, 0.81360, 0.81422}}};
  for (const auto& [pq, row] : table) {
    const auto [p, q] = pq;
    for (const CongruenceClass& cc : numth::unit_classes(p * q)) {
      const std::size_t i = 2 * (cc.k() % p != 1) + (cc.k() % q != 1);
      const double v = densities::cyclic_density_ap({cc, 1, 10}).scaled.value;
      CHECK_MESSAGE(std::fabs(v - row[i]) <= 1e-5, cc.str());
    }
  }
}

TEST_CASE("divisibility densities: examples") {
  CHECK(densities::divisibility_density_global(3) == ExactRational(7, 16));
  CHECK(densities::divisibility_density_global(1) == ExactRational(1));
  CHECK(densities::divisibility_density_global(5) == ExactRational(23, 96));
  CHECK(densities::divisibility_density_ap({CongruenceClass(5, 2), 5, 10}) == ExactRational(1, 16));
  CHECK(densities::divisibility_density_ap({CongruenceClass(8, 3), 8, 10}) == ExactRational(1, 16));
  CHECK(densities::divisibility_density_ap({CongruenceClass(3, 2), 2, 10}) == ExactRational(1, 3));
  CHECK(densities::divisibility_density_ap({CongruenceClass(6, 1), 8, 10}) ==
        densities::divisibility_density_ap({CongruenceClass(6, 5), 8, 10}));
  CHECK(densities::divisibility_density_ap({CongruenceClass(6, 1), 8, 10}) == ExactRational(11, 96));
}

TEST_CASE("divisibility_density_ap against the matrix-count oracle (n <= 8, m <= 12)") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      const std::uint64_t M = lcm(n, densities::underline_m(m).value());
      for (const CongruenceClass& cc : numth::unit_classes(n)) {
        ExactRational sum;
        long count = 0;
        for (std::uint64_t r = 1; r <= M; ++r) {
          if (std::gcd(r, M) != 1 || r % n != cc.k() % n) continue;
          sum += omega_oracle_cached(static_cast<std::int64_t>(r), static_cast<std::int64_t>(m));
          ++count;
        }
        const ExactRational want = sum / ExactRational(static_cast<long>(oracle::phi(M)));
        CHECK_MESSAGE(densities::divisibility_density_ap({cc, m, 10}) == want, cc.str() << ", m = " << m);
      }
    }
  }
}

TEST_CASE("cyclic partition identity, exact finite parts (n <= 100)") {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    ExactRational sum;
    for (const CongruenceClass& cc : numth::unit_classes(n)) sum += densities::cyclic_finite_part(cc);
    ExactRational want(1);
    for (const auto& [l, e] : oracle::trial_factor(n)) {
      want *= ExactRational(1) + g_oracle(l) / ExactRational(static_cast<long>(l - 1));
    }
    CHECK_MESSAGE(sum / ExactRational(static_cast<long>(oracle::phi(n))) == want, "n = " << n);
  }
}

TEST_CASE("bias ordering of the finite parts, equality exactly at powers of two (n <= 100)") {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const ExactRational low = densities::cyclic_finite_part(CongruenceClass(n, 1));
    const ExactRational high = densities::cyclic_finite_part(CongruenceClass(n, -1));
    bool all_equal = true;
    for (const CongruenceClass& cc : numth::unit_classes(n)) {
      const ExactRational f = densities::cyclic_finite_part(cc);
      CHECK(low <= f);
      CHECK(f <= high);
      all_equal = all_equal && f == low;
    }
    CHECK_MESSAGE(all_equal == is_power_of_two(n), "n = " << n);
  }
}

TEST_CASE("divisibility partition and no-bias cases (n <= 30, m <= 30)") {
  for (std::uint64_t m = 1; m <= 30; ++m) {
    const ExactRational global = densities::divisibility_density_global(m);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      ExactRational sum;
      const ExactRational phi(static_cast<long>(oracle::phi(n)));
      for (const CongruenceClass& cc : numth::unit_classes(n)) {
        const ExactRational v = densities::divisibility_density_ap({cc, m, 10});
        sum += v;
        if (std::gcd(n, m) == 1 || m == 2 || m == 4) CHECK(v == global / phi);
      }
      CHECK_MESSAGE(sum == global, "n = " << n << ", m = " << m);
    }
  }
}

TEST_CASE("lower bounds omega_r(m) >= 1/m and C^D(m) >= 1/m (m <= 300)") {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    const ExactRational bound(1, static_cast<long>(m));
    const std::uint64_t u = densities::underline_m(m).value();
    for (std::uint64_t r = 1; r <= u; ++r) {
      if (std::gcd(r, u) == 1) CHECK(densities::omega_r(static_cast<std::int64_t>(r), m) >= bound);
    }
    CHECK(densities::divisibility_density_global(m) >= bound);
  }
}

TEST_CASE("Table 3: the 90 entries as reduced fractions") {
  const std::vector<std::vector<std::string>> table = {
      {"2/3", "7/16", "5/12", "23/96", "7/24", "11/48"},
      {"1/3", "3/16", "5/24", "23/192", "1/8", "11/96"},
      {"1/3", "1/4", "5/24", "23/192", "1/6", "11/96"},
      {"1/3", "7/32", "5/24", "23/192", "7/48", "5/48"},
      {"1/3", "7/32", "5/24", "23/192", "7/48", "1/8"},
      {"1/6", "7/64", "5/48", "5/96", "7/96", "11/192"},
      {"1/6", "7/64", "5/48", "1/16", "7/96", "11/192"},
      {"1/6", "7/64", "5/48", "1/16", "7/96", "11/192"},
      {"1/6", "7/64", "5/48", "1/16", "7/96", "11/192"},
      {"1/3", "3/16", "5/24", "23/192", "1/8", "11/96"},
      {"1/3", "1/4", "5/24", "23/192", "1/6", "11/96"},
      {"1/6", "7/64", "5/48", "23/384", "7/96", "5/96"},
      {"1/6", "7/64", "5/48", "23/384", "7/96", "1/16"},
      {"1/6", "7/64", "5/48", "23/384", "7/96", "5/96"},
      {"1/6", "7/64", "5/48", "23/384", "7/96", "1/16"}};
  const auto& rows = report::table3_rows();
  const auto& cols = report::table3_columns();
  REQUIRE(rows.size() == table.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const ExactRational v =
          densities::divisibility_density_ap({CongruenceClass(rows[i].first, rows[i].second), cols[j], 10});
      CHECK_MESSAGE(v == ExactRational::parse(table[i][j]),
                    "(" << rows[i].first << "," << rows[i].second << ") m = " << cols[j]);
    }
  }
}

TEST_CASE("DensityQuery validation") {
  CHECK_THROWS_AS(densities::cyclic_density_ap({CongruenceClass(3, 1), 1, 3}), DomainError);
  CHECK_THROWS_AS(densities::divisibility_density_ap({CongruenceClass(3, 1), 0, 10}), DomainError);
  CHECK_THROWS_AS(densities::divisibility_density_global(0), DomainError);
}
