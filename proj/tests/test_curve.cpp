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
#include <numbers>

#include "curve/bsgs.hpp"
#include "curve/curve.hpp"
#include "curve/long_model.hpp"
#include "numth/congruence.hpp"
#include "numth/integer.hpp"
#include "numth/random.hpp"
#include "oracles.hpp"

using namespace ecavg;
using curve::CurveModP;
using curve::GroupShape;
using curve::LongModel;
using numth::CongruenceClass;

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (oracle::is_prime(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t non_residue(std::uint64_t p) {
  for (std::uint64_t u = 2;; ++u) {
    if (oracle::euler_criterion(static_cast<std::int64_t>(u), p) == -1) return u;
  }
}

const char* const kModels[] = {"[0,1,0,-2,-1]", "[0,1,1,-8,19]", "[1,0,1,32271697,-1200056843302]"};

}  // namespace

TEST_CASE("CurveModP: validation") {
  CHECK_THROWS_AS(CurveModP(3, 1, 1), DomainError);
  CHECK_THROWS_AS(CurveModP(2, 1, 1), DomainError);
  CHECK_THROWS_AS(CurveModP(9, 1, 1), DomainError);
  CHECK_THROWS_AS(CurveModP(5, 0, 0), DomainError);
  CHECK_THROWS_AS(CurveModP(7, -3, 2), DomainError);  // 4(-27) + 27*4 = 0
  const CurveModP c(7, -1, 0);
  CHECK(c.a() == 6);
  CHECK(c.b() == 0);
}

TEST_CASE("point_count: examples") {
  CHECK(curve::point_count(CurveModP(5, 0, 1)) == 6);
  CHECK(curve::point_count(CurveModP(5, 1, 0)) == 4);
  CHECK(curve::point_count(CurveModP(7, -1, 0)) == 8);
}

TEST_CASE("torsion_count: examples") {
  const CurveModP c7(7, -1, 0), c5(5, 0, 1);
  CHECK(curve::torsion_count(c7, 2, 8) == 4);
  CHECK(curve::torsion_count(c7, 3, 8) == 1);
  CHECK(curve::torsion_count(c5, 3, 6) == 3);
  CHECK(curve::torsion_count(c5, 5, 6) == 1);
}

TEST_CASE("group_shape, is_cyclic and frobenius_angle: examples") {
  const CurveModP c7(7, -1, 0), c5(5, 0, 1);
  const GroupShape s7 = curve::group_shape(c7), s5 = curve::group_shape(c5);
  CHECK(s7.d == 2);
  CHECK(s7.e == 4);
  CHECK(s5.d == 1);
  CHECK(s5.e == 6);
  CHECK_FALSE(curve::is_cyclic(c7));
  CHECK(curve::is_cyclic(c5));
  CHECK(curve::frobenius_angle(c5) == doctest::Approx(std::numbers::pi / 2));
  CHECK(curve::frobenius_angle(c7) == doctest::Approx(std::numbers::pi / 2));
  CHECK(curve::frobenius_angle(101, 102) == doctest::Approx(std::numbers::pi / 2));
  CHECK(curve::frobenius_angle(101, 102 - 20) == doctest::Approx(std::acos(20 / (2 * std::sqrt(101.0)))));
}

TEST_CASE("prime-order curves are cyclic with shape (1, N)") {
  int seen = 0;
  for (std::uint64_t p : primes_between(5, 200)) {
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p) && seen < 400; a += 3) {
      for (std::int64_t b = 1; b < static_cast<std::int64_t>(p); b += 5) {
        if (CurveModP::discriminant(p, a, b) == 0) continue;
        const CurveModP c(p, a, b);
        const std::uint64_t N = curve::point_count(c);
        if (!oracle::is_prime(N)) continue;
        ++seen;
        const GroupShape s = curve::group_shape(c);
        CHECK(s.d == 1);
        CHECK(s.e == N);
        CHECK(curve::is_cyclic(c));
      }
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("every valid curve over every p <= 61 matches the all-point-orders oracle") {
  const std::uint64_t qs[] = {2, 3, 5, 7, 11, 13};
  long curves = 0;
  bool ok = true;
  for (std::uint64_t p : primes_between(5, 61)) {
    const std::uint64_t u = non_residue(p);
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(p); ++b) {
        if (CurveModP::discriminant(p, a, b) == 0) continue;
        ++curves;
        const CurveModP c(p, a, b);
        const oracle::BruteCurve brute(p, a, b);
        const std::uint64_t N = curve::point_count(c);
        const GroupShape s = curve::group_shape(c);
        const auto [d, e] = brute.shape();
        const bool cyclic = curve::is_cyclic(c);
        bool here = N == brute.points.size() && s.order == N && s.d == d && s.e == e &&
                    s.d * s.e == N && (p - 1) % s.d == 0 && s.e % s.d == 0 && !s.probabilistic &&
                    cyclic == brute.has_point_of_order(N) && cyclic == (s.d == 1);
        for (std::uint64_t q : qs) {
          const std::uint64_t t = curve::torsion_count(c, q, N);
          here = here && t == brute.torsion(q) && (t == 1 || t == q || t == q * q) &&
                 (t != q * q || (p - 1) % q == 0);
        }
        const CurveModP tw = c.twist(u);
        here = here && N + curve::point_count(tw) == 2 * p + 2;
        const double angle = curve::frobenius_angle(c);
        here = here && angle >= 0 && angle <= std::numbers::pi;
        if (!here) {
          MESSAGE("mismatch at p=" << p << " a=" << a << " b=" << b);
          ok = false;
        }
      }
    }
  }
  CHECK(ok);
  CHECK(curves > 10000);
}

TEST_CASE("large-q torsion below the scan bound agrees with qP = O over all points") {
  // q > 13 takes the point scan; q <= 13 the division polynomial. Both are
  // checked against multiply() over E(F_p).
  numth::Rng rng = numth::stream_for(5, 0);
  int full = 0;
  for (std::uint64_t p : {4001ULL, 4003ULL, 4051ULL, 5081ULL, 6007ULL}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::int64_t a = numth::uniform_int(rng, 0, p - 1), b = numth::uniform_int(rng, 0, p - 1);
      if (CurveModP::discriminant(p, a, b) == 0) continue;
      const CurveModP c(p, a, b);
      const std::uint64_t N = curve::point_count(c);
      const auto pts = curve::all_points(c);
      REQUIRE(pts.size() == N);
      for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 17ULL, 19ULL, 23ULL}) {
        if (N % q) continue;
        std::uint64_t want = 0;
        for (const curve::Point& P : pts) want += curve::multiply(c, P, q).infinity;
        CHECK(curve::torsion_count(c, q, N) == want);
        full += want == q * q;
      }
    }
  }
  MESSAGE("full q-torsion seen " << full << " times");
}

TEST_CASE("group_shape above the scan bound: invariants and agreement with exponents") {
  numth::Rng rng = numth::stream_for(9, 0);
  for (std::uint64_t p : {10007ULL, 20011ULL, 100003ULL}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t a = numth::uniform_int(rng, 0, p - 1), b = numth::uniform_int(rng, 0, p - 1);
      if (CurveModP::discriminant(p, a, b) == 0) continue;
      const CurveModP c(p, a, b);
      const std::uint64_t N = curve::point_count(c);
      numth::Rng r = numth::stream_for(1, trial);
      const GroupShape s = curve::group_shape(c, &r);
      CHECK(s.order == N);
      CHECK(s.d * s.e == N);
      CHECK(s.e % s.d == 0);
      CHECK((p - 1) % s.d == 0);
      // e is the exponent: e kills random points, and d = 1 gives cyclic.
      numth::Rng pr = numth::stream_for(2, trial);
      for (int i = 0; i < 8; ++i) CHECK(curve::multiply(c, curve::random_point(c, pr), s.e).infinity);
      CHECK(curve::is_cyclic(c, N) == (s.d == 1));
    }
  }
}

TEST_CASE("BSGS point counts agree with the Legendre sum") {
  numth::Rng rng = numth::stream_for(3, 0);
  for (std::uint64_t p : {1009ULL, 10007ULL, 65537ULL, 1000003ULL}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::int64_t a = numth::uniform_int(rng, 0, p - 1), b = numth::uniform_int(rng, 0, p - 1);
      if (CurveModP::discriminant(p, a, b) == 0) continue;
      const CurveModP c(p, a, b);
      const std::uint64_t N = curve::point_count(c);
      numth::Rng r = numth::stream_for(4, trial);
      CHECK(curve::fast_point_count(c, r) == N);
      const auto maybe = curve::bsgs_point_count(c, r);
      if (maybe) CHECK(*maybe == N);
    }
  }
}

TEST_CASE("point arithmetic: group law") {
  const CurveModP c(101, 3, 7);
  const auto pts = curve::all_points(c);
  const std::uint64_t N = pts.size();
  for (std::size_t i = 0; i < pts.size(); i += 7) {
    CHECK(curve::on_curve(c, pts[i]));
    CHECK(curve::multiply(c, pts[i], N).infinity);
    CHECK(curve::add(c, pts[i], curve::negate(c, pts[i])).infinity);
    for (std::size_t j = 0; j < pts.size(); j += 11) {
      CHECK(curve::add(c, pts[i], pts[j]) == curve::add(c, pts[j], pts[i]));
      CHECK(curve::multiply(c, pts[i], 3) == curve::add(c, pts[i], curve::add(c, pts[i], pts[i])));
    }
  }
}

TEST_CASE("LongModel: parsing") {
  const LongModel m = LongModel::parse("[1,0,1,32271697,-1200056843302]");
  CHECK(m.str() == "[1,0,1,32271697,-1200056843302]");
  CHECK(LongModel::parse(" 0, 1, 1, -8, 19 ").str() == "[0,1,1,-8,19]");
  CHECK_THROWS_AS(LongModel::parse("1,2,3,4"), DomainError);
  CHECK_THROWS_AS(LongModel::parse("1,2,x,4,5"), DomainError);
  CHECK_THROWS_AS(LongModel::parse(""), DomainError);
}

TEST_CASE("reduce_to_short: examples") {
  const auto s = curve::reduce_to_short(LongModel::parse("0,0,0,-1,0"), 7);
  REQUIRE(s);
  CHECK(s->a() == 6);
  CHECK(s->b() == 0);
  CHECK_THROWS_AS(curve::reduce_to_short(LongModel::parse("0,1,0,-2,-1"), 3), DomainError);
  const LongModel m = LongModel::parse("0,1,1,-8,19");
  // The discriminant of this model is -5^6 * 11.
  CHECK_FALSE(curve::reduce_to_short(m, 5));
  CHECK_FALSE(curve::reduce_to_short(m, 11));
  const auto r = curve::reduce_to_short(m, 13);
  REQUIRE(r);
  CHECK(curve::point_count(*r) == m.naive_point_count(13));
}

TEST_CASE("reduce_to_short preserves point counts for all good p <= 500") {
  for (const char* text : kModels) {
    const LongModel m = LongModel::parse(text);
    int good = 0;
    for (std::uint64_t p : primes_between(5, 500)) {
      const auto c = curve::reduce_to_short(m, p);
      if (!c) continue;
      ++good;
      CHECK(curve::point_count(*c) == m.naive_point_count(p));
    }
    CHECK(good > 80);
  }
}

TEST_CASE("individual_census: the three worked curves") {
  const double x = 3000;
  // 2 | N only for p = +-1 mod 7.
  const LongModel e2 = LongModel::parse(kModels[0]);
  for (std::int64_t k = 1; k < 7; ++k) {
    const auto r = curve::individual_census(e2, x, CongruenceClass(7, k), {2});
    if (k == 1 || k == 6) {
      CHECK(r.divisible[0] > 0);
    } else {
      CHECK(r.divisible[0] == 0);
    }
  }
  const LongModel e1 = LongModel::parse(kModels[1]);
  for (std::int64_t k : {2, 3}) CHECK(curve::individual_census(e1, x, CongruenceClass(5, k), {5}).divisible[0] == 0);
  CHECK(curve::individual_census(e1, x, CongruenceClass(5, 1), {5}).divisible[0] > 0);
  const LongModel e3 = LongModel::parse(kModels[2]);
  for (std::int64_t k : {3, 5}) {
    const auto r = curve::individual_census(e3, x, CongruenceClass(8, k), {});
    CHECK(r.cyclic == 0);
    CHECK(r.good_primes.size() > 50);
  }
  CHECK(curve::individual_census(e3, x, CongruenceClass(8, 1), {}).cyclic > 0);
}

TEST_CASE("individual_census: primes, bad primes and counts line up") {
  const LongModel m = LongModel::parse(kModels[0]);
  const auto r = curve::individual_census(m, 20000, CongruenceClass(1, 0), {2, 3, 4});
  const auto want = primes_between(5, 20000);
  std::vector<std::uint64_t> got(r.good_primes.begin(), r.good_primes.end());
  got.insert(got.end(), r.bad_primes.begin(), r.bad_primes.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(r.bad_primes == std::vector<std::uint32_t>{7});
  std::uint64_t cyclic = 0, two = 0;
  for (std::uint32_t p : r.good_primes) {
    const auto c = curve::reduce_to_short(m, p);
    const std::uint64_t N = curve::point_count(*c);
    cyclic += curve::is_cyclic(*c, N);
    two += N % 2 == 0;
  }
  CHECK(r.cyclic == cyclic);
  CHECK(r.divisible[0] == two);
  CHECK(r.divisible[2] <= r.divisible[0]);
  CHECK_THROWS_AS(curve::individual_census(m, 4, CongruenceClass(1, 0), {}), DomainError);
  CHECK_THROWS_AS(curve::individual_census(m, 100, CongruenceClass(1, 0), {0}), DomainError);
}
