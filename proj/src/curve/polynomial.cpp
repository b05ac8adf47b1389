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

#include "curve/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "numth/integer.hpp"

namespace ecavg::curve {

using Poly = PolyRing::Poly;

void PolyRing::trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly PolyRing::add(const Poly& f, const Poly& g) const {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] += g[i];
    if (out[i] >= p_) out[i] -= p_;
  }
  trim(out);
  return out;
}

Poly PolyRing::sub(const Poly& f, const Poly& g) const {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = out[i] >= g[i] ? out[i] - g[i] : out[i] + p_ - g[i];
  trim(out);
  return out;
}

Poly PolyRing::mul(const Poly& f, const Poly& g) const {
  if (f.empty() || g.empty()) return {};
  std::vector<unsigned __int128> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(f[i]) * g[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p_);
  trim(out);
  return out;
}

Poly PolyRing::scale(const Poly& f, std::uint64_t c) const {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = numth::mulmod(f[i], c % p_, p_);
  trim(out);
  return out;
}

Poly PolyRing::rem(const Poly& f, const Poly& g) const {
  Poly r = f;
  trim(r);
  const int dg = degree(g);
  const std::uint64_t lead_inv = numth::inverse_mod(g.back(), p_);
  while (degree(r) >= dg) {
    const std::uint64_t c = numth::mulmod(r.back(), lead_inv, p_);
    const std::size_t shift = r.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t t = numth::mulmod(c, g[i], p_);
      std::uint64_t& slot = r[shift + i];
      slot = slot >= t ? slot - t : slot + p_ - t;
    }
    trim(r);
  }
  return r;
}

Poly PolyRing::gcd(Poly f, Poly g) const {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  return scale(f, numth::inverse_mod(f.back(), p_));
}

Poly PolyRing::powmod(Poly base, std::uint64_t e, const Poly& m) const {
  Poly result = rem(Poly{1}, m);
  base = rem(base, m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

int PolyRing::count_roots(const Poly& f) const {
  if (degree(f) <= 0) return 0;
  const Poly xp = powmod(Poly{0, 1}, p_, f);
  return degree(gcd(f, sub(xp, Poly{0, 1})));
}

Poly division_polynomial(const PolyRing& ring, unsigned q, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t p = ring.modulus();
  auto c = [p](std::int64_t v) { return numth::reduce(v, p); };
  auto m = [p](std::uint64_t x, std::uint64_t y) { return numth::mulmod(x, y, p); };
  a %= p;
  b %= p;

  // f_n = psi_n for odd n and psi_n / (2y) for even n, all polynomials in x.
  std::vector<Poly> f(std::max(q + 1, 5u));
  f[0] = {};
  f[1] = {1};
  f[2] = {1};
  f[3] = {c(-static_cast<std::int64_t>(m(a, a))), m(12, b), m(6, a), 0, 3};
  const std::uint64_t a2 = m(a, a);
  f[4] = {m(2, c(-static_cast<std::int64_t>((m(8, m(b, b)) + m(a2, a)) % p))),
          m(2, c(-static_cast<std::int64_t>(m(4, m(a, b))))),
          m(2, c(-static_cast<std::int64_t>(m(5, a2)))),
          m(40, b),
          m(10, a),
          0,
          2};
  for (auto& g : f) PolyRing::trim(g);

  const Poly F = {b, a, 0, 1};
  const Poly F2x16 = ring.scale(ring.mul(F, F), 16);
  auto cube = [&](const Poly& g) { return ring.mul(ring.mul(g, g), g); };
  auto sq = [&](const Poly& g) { return ring.mul(g, g); };

  for (unsigned n = 5; n <= q; ++n) {
    const unsigned k = n / 2;
    if (n % 2 == 1) {
      Poly left = ring.mul(f[k + 2], cube(f[k]));
      Poly right = ring.mul(f[k - 1], cube(f[k + 1]));
      if (k % 2 == 0) {
        left = ring.mul(F2x16, left);
      } else {
        right = ring.mul(F2x16, right);
      }
      f[n] = ring.sub(left, right);
    } else {
      f[n] = ring.mul(f[k], ring.sub(ring.mul(f[k + 2], sq(f[k - 1])),
                                     ring.mul(f[k - 2], sq(f[k + 1]))));
    }
  }
  return f[q];
}

}  // namespace ecavg::curve
