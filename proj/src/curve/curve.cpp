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

#include "curve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "curve/polynomial.hpp"
#include "numth/factored.hpp"
#include "numth/integer.hpp"

namespace ecavg::curve {

using numth::mulmod;

namespace {

std::uint64_t addm(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  const std::uint64_t s = x + y;
  return s >= p ? s - p : s;
}

std::uint64_t subm(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return x >= y ? x - y : x + p - y;
}

std::uint64_t rhs(const CurveModP& c, std::uint64_t x) {
  const std::uint64_t p = c.p();
  return addm(mulmod(addm(mulmod(x, x, p), c.a(), p), x, p), c.b(), p);
}

std::uint64_t ipow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= q;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

// Exponent of the order of a point known to lie in the q-primary part.
unsigned primary_order_exponent(const CurveModP& c, Point P, std::uint64_t q) {
  unsigned e = 0;
  while (!P.infinity) {
    P = multiply(c, P, q);
    ++e;
  }
  return e;
}

numth::Rng curve_stream(const CurveModP& c, std::uint64_t salt) {
  return numth::stream_for(c.p() * 0x100000001b3ULL ^ c.a(), c.b() * 31 + salt);
}

// Odd q <= kDivisionPolynomialMaxQ: count rational x-roots of psi_q whose
// y is rational too.
std::uint64_t torsion_by_division_polynomial(const CurveModP& c, unsigned q) {
  const PolyRing ring(c.p());
  using Poly = PolyRing::Poly;
  const Poly fq = division_polynomial(ring, q, c.a(), c.b());
  const Poly x = {0, 1};
  const Poly roots = ring.gcd(fq, ring.sub(ring.powmod(x, c.p(), fq), x));
  if (PolyRing::degree(roots) <= 0) return 1;
  const Poly F = {c.b(), c.a(), 0, 1};
  const Poly h = ring.powmod(F, (c.p() - 1) / 2, roots);
  const Poly rational = ring.gcd(roots, ring.sub(h, Poly{1}));
  return 1 + 2 * static_cast<std::uint64_t>(std::max(0, PolyRing::degree(rational)));
}

std::uint64_t torsion_by_scan(const CurveModP& c, std::uint64_t q) {
  const auto table = residue_table(c.p());
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < c.p(); ++x) {
    const std::uint64_t v = rhs(c, x);
    if (table->chi(v) != 1) continue;
    const Point P{x, *numth::sqrt_mod(v, c.p()), false};
    if (multiply(c, P, q).infinity) count += 2;
  }
  return count;
}

}  // namespace

CurveModP::CurveModP(std::uint64_t p, std::int64_t a, std::int64_t b) : p_(p) {
  if (p <= 3 || !numth::is_prime(p)) {
    throw DomainError("CurveModP: p must be a prime > 3, got " + std::to_string(p));
  }
  if (p >= (1ULL << 32)) throw DomainError("CurveModP: p must be below 2^32");
  a_ = numth::reduce(a, p);
  b_ = numth::reduce(b, p);
  if (discriminant(p, a_, b_) == 0) {
    throw DomainError("CurveModP: singular curve " + str());
  }
}

std::uint64_t CurveModP::discriminant(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t a3 = mulmod(mulmod(a, a, p), a, p);
  return addm(mulmod(4 % p, a3, p), mulmod(27 % p, mulmod(b, b, p), p), p);
}

CurveModP CurveModP::twist(std::uint64_t u) const {
  const std::uint64_t u2 = mulmod(u, u, p_), u3 = mulmod(u2, u, p_);
  return CurveModP(p_, static_cast<std::int64_t>(mulmod(u2, a_, p_)),
                   static_cast<std::int64_t>(mulmod(u3, b_, p_)));
}

std::string CurveModP::str() const {
  return "y^2 = x^3 + " + std::to_string(a_) + "x + " + std::to_string(b_) + " over F_" +
         std::to_string(p_);
}

Point negate(const CurveModP& c, const Point& P) {
  if (P.infinity) return P;
  return {P.x, P.y == 0 ? 0 : c.p() - P.y, false};
}

Point add(const CurveModP& c, const Point& P, const Point& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const std::uint64_t p = c.p();
  std::uint64_t lambda;
  if (P.x == Q.x) {
    if (addm(P.y, Q.y, p) == 0) return Point{};
    const std::uint64_t num = addm(mulmod(3, mulmod(P.x, P.x, p), p), c.a(), p);
    lambda = mulmod(num, numth::inverse_mod(addm(P.y, P.y, p), p), p);
  } else {
    lambda = mulmod(subm(Q.y, P.y, p), numth::inverse_mod(subm(Q.x, P.x, p), p), p);
  }
  const std::uint64_t x3 = subm(subm(mulmod(lambda, lambda, p), P.x, p), Q.x, p);
  const std::uint64_t y3 = subm(mulmod(lambda, subm(P.x, x3, p), p), P.y, p);
  return {x3, y3, false};
}

Point multiply(const CurveModP& c, Point P, std::uint64_t k) {
  Point R;
  while (k > 0) {
    if (k & 1) R = add(c, R, P);
    k >>= 1;
    if (k > 0) P = add(c, P, P);
  }
  return R;
}

bool on_curve(const CurveModP& c, const Point& P) {
  return P.infinity || mulmod(P.y, P.y, c.p()) == rhs(c, P.x);
}

std::vector<Point> all_points(const CurveModP& c) {
  const auto table = residue_table(c.p());
  std::vector<Point> out{Point{}};
  for (std::uint64_t x = 0; x < c.p(); ++x) {
    const std::uint64_t v = rhs(c, x);
    if (v == 0) {
      out.push_back({x, 0, false});
    } else if (table->chi(v) == 1) {
      const std::uint64_t y = *numth::sqrt_mod(v, c.p());
      out.push_back({x, std::min(y, c.p() - y), false});
      out.push_back({x, std::max(y, c.p() - y), false});
    }
  }
  return out;
}

Point random_point(const CurveModP& c, numth::Rng& rng) {
  const std::uint64_t p = c.p();
  for (;;) {
    const std::uint64_t x = static_cast<std::uint64_t>(numth::uniform_int(rng, 0, static_cast<std::int64_t>(p) - 1));
    const std::uint64_t v = rhs(c, x);
    const bool coin = rng() & 1;
    if (v == 0) {
      if (coin) return {x, 0, false};
      continue;
    }
    if (numth::legendre_symbol(static_cast<std::int64_t>(v), p) != 1) continue;
    const std::uint64_t y = *numth::sqrt_mod(v, p);
    return {x, coin ? y : p - y, false};
  }
}

ResidueTable::ResidueTable(std::uint64_t p) : p_(p), table_(p, -1) {
  table_[0] = 0;
  for (std::uint64_t i = 1; i <= p / 2; ++i) table_[mulmod(i, i, p)] = 1;
}

std::shared_ptr<const ResidueTable> residue_table(std::uint64_t p) {
  thread_local std::shared_ptr<const ResidueTable> last;
  if (!last || last->p() != p) last = std::make_shared<const ResidueTable>(p);
  return last;
}

std::int64_t character_sum(const ResidueTable& t, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t p = t.p();
  const std::int8_t* chi = t.raw().data();
  // v(x) = x^3 + ax + b by finite differences.
  std::uint64_t v = b % p, d = (1 + a) % p, e = 6 % p;
  const std::uint64_t six = 6 % p;
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    s += chi[v];
    v = addm(v, d, p);
    d = addm(d, e, p);
    e = addm(e, six, p);
  }
  return s;
}

std::uint64_t point_count(const CurveModP& c, const ResidueTable& t) {
  if (t.p() != c.p()) throw std::logic_error("point_count: residue table for the wrong prime");
  const std::int64_t trace = -character_sum(t, c.a(), c.b());
  if (trace * trace > 4 * static_cast<std::int64_t>(c.p())) {
    throw std::logic_error("point_count: Hasse bound violated for " + c.str());
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(c.p()) + 1 - trace);
}

std::uint64_t point_count(const CurveModP& c) { return point_count(c, *residue_table(c.p())); }

std::uint64_t torsion_count(const CurveModP& c, std::uint64_t q, std::uint64_t order,
                            numth::Rng* rng, bool* random) {
  if (random) *random = false;
  if (order % q != 0) return 1;
  if (order % (q * q) != 0 || (c.p() - 1) % q != 0) return q;
  std::uint64_t count;
  if (q == 2) {
    const PolyRing ring(c.p());
    count = 1 + static_cast<std::uint64_t>(ring.count_roots({c.b(), c.a(), 0, 1}));
  } else if (q <= kDivisionPolynomialMaxQ) {
    count = torsion_by_division_polynomial(c, static_cast<unsigned>(q));
  } else if (c.p() <= kDeterministicBound) {
    count = torsion_by_scan(c, q);
  } else {
    numth::Rng local = curve_stream(c, q);
    numth::Rng& stream = rng ? *rng : local;
    const unsigned v = valuation(order, q);
    const std::uint64_t cofactor = order / ipow(q, v);
    count = q * q;
    for (int i = 0; i < kSylowSamples; ++i) {
      const Point Q = multiply(c, random_point(c, stream), cofactor);
      if (primary_order_exponent(c, Q, q) == v) {
        count = q;
        break;
      }
    }
    if (random) *random = true;
  }
  if (count != 1 && count != q && count != q * q) {
    throw std::logic_error("torsion_count: impossible count for " + c.str());
  }
  return count;
}

bool is_cyclic(const CurveModP& c, std::uint64_t order, bool* random) {
  if (random) *random = false;
  const std::uint64_t g = std::gcd(order, c.p() - 1);
  if (g == 1) return true;
  const numth::Factored gf = numth::factor(g);
  for (const auto& pp : gf.factors()) {
    const std::uint64_t q = pp.prime;
    if (order % (q * q) != 0) continue;
    bool sampled = false;
    const bool full = torsion_count(c, q, order, nullptr, &sampled) == q * q;
    if (random) *random = *random || sampled;
    if (full) return false;
  }
  return true;
}

bool is_cyclic(const CurveModP& c) { return is_cyclic(c, point_count(c)); }

GroupShape group_shape(const CurveModP& c, numth::Rng* rng) {
  GroupShape out;
  out.order = point_count(c);
  const std::uint64_t N = out.order, p = c.p();
  const std::uint64_t g = std::gcd(N, p - 1);
  const numth::Factored gf = numth::factor(g);
  std::vector<Point> points;  // filled lazily in the deterministic regime
  for (const auto& pp : gf.factors()) {
    const std::uint64_t q = pp.prime;
    if (N % (q * q) != 0) continue;
    bool random = false;
    if (torsion_count(c, q, N, rng, &random) != q * q) continue;
    out.probabilistic = out.probabilistic || random;
    const unsigned v = valuation(N, q);
    const unsigned cap = std::min(v / 2, valuation(p - 1, q));
    unsigned s = 1;
    if (cap > 1 && p <= kDeterministicBound) {
      if (points.empty()) points = all_points(c);
      while (s < cap) {
        const std::uint64_t qs = ipow(q, s + 1);
        const auto killed = std::count_if(points.begin(), points.end(),
                                          [&](const Point& P) { return multiply(c, P, qs).infinity; });
        if (static_cast<std::uint64_t>(killed) != qs * qs) break;
        ++s;
      }
    } else if (cap > 1) {
      numth::Rng local = curve_stream(c, q + 1);
      numth::Rng& stream = rng ? *rng : local;
      const std::uint64_t cofactor = N / ipow(q, v);
      unsigned largest = 0;
      for (int i = 0; i < kSylowSamples; ++i) {
        const Point Q = multiply(c, random_point(c, stream), cofactor);
        largest = std::max(largest, primary_order_exponent(c, Q, q));
      }
      s = std::clamp(v - largest, 1u, cap);
      out.probabilistic = true;
    }
    out.d *= ipow(q, s);
  }
  out.e = N / out.d;
  if (out.e % out.d != 0 || (p - 1) % out.d != 0) {
    throw std::logic_error("group_shape: inconsistent invariants for " + c.str());
  }
  return out;
}

double frobenius_angle(std::uint64_t p, std::uint64_t order) {
  const double ap = static_cast<double>(static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(order));
  const double ratio = std::clamp(ap / (2 * std::sqrt(static_cast<double>(p))), -1.0, 1.0);
  return std::acos(ratio);
}

double frobenius_angle(const CurveModP& c) { return frobenius_angle(c.p(), point_count(c)); }

}  // namespace ecavg::curve
