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

#include "densities/euler_product.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "numth/integer.hpp"
#include "numth/sieve.hpp"

namespace ecavg::densities {

namespace {

constexpr mpfr_prec_t kBits = 512;
constexpr int kSeriesTerms = 24;  // s = 4 .. kSeriesTerms
constexpr int kMoebiusTerms = 5;  // k = 1 .. kMoebiusTerms

// Minimal RAII holder; MPFR has no C++ wrapper in the base system.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
  explicit Mpfr(double d) : Mpfr() { mpfr_set_d(v_, d, MPFR_RNDN); }
  Mpfr(const Mpfr& o) : Mpfr() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpfr& operator=(const Mpfr& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

void set_rational(Mpfr& out, const mpq_class& q) { mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDN); }

// log(1 - 1/((l-1) l (l^2-1))), the log of one Euler factor.
void log_factor(Mpfr& out, std::uint64_t l) {
  mpz_class den = mpz_class(l - 1) * l * (mpz_class(l) * l - 1);
  mpq_class x(1, den);
  x.canonicalize();
  Mpfr t;
  set_rational(t, -x);
  mpfr_log1p(out.get(), t.get(), MPFR_RNDN);
}

int moebius(int k) {
  int result = 1;
  for (int q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    k /= q;
    if (k % q == 0) return 0;
    result = -result;
  }
  return k > 1 ? -result : result;
}

// Coefficients d_s of -log(1 - x(u)), x(u) = sum_{j>=0} (floor(j/2)+1) u^{4+j}.
std::vector<mpq_class> log_series_coefficients() {
  const int n = kSeriesTerms;
  std::vector<mpq_class> x(n + 1), power(n + 1), out(n + 1);
  for (int j = 0; 4 + j <= n; ++j) x[4 + j] = j / 2 + 1;
  power = x;
  for (int i = 1; 4 * i <= n; ++i) {
    for (int s = 0; s <= n; ++s) out[s] += power[s] / i;
    std::vector<mpq_class> next(n + 1);
    for (int a = 0; a <= n; ++a) {
      if (power[a] == 0) continue;
      for (int b = 0; a + b <= n; ++b) {
        if (x[b] != 0) next[a + b] += power[a] * x[b];
      }
    }
    power.swap(next);
  }
  return out;
}

struct TailCache {
  Mpfr log_full;     // log of the product over every prime
  double log_bound;  // rigorous bound on |error| of log_full
};

const TailCache& global_cache() {
  static TailCache cache;
  static std::once_flag once;
  std::call_once(once, [] {
    const std::uint64_t L = kEulerCutoff;
    const auto primes = numth::primes_up_to(L);

    Mpfr head, term;
    for (std::uint64_t l : primes) {
      log_factor(term, l);
      mpfr_add(head.get(), head.get(), term.get(), MPFR_RNDN);
    }

    // P_L(s) by Moebius inversion of log zeta_L.
    auto log_zeta_tail = [&](long t) {
      Mpfr z, f, pw;
      mpfr_zeta_ui(z.get(), static_cast<unsigned long>(t), MPFR_RNDN);
      for (std::uint64_t l : primes) {
        mpfr_ui_pow_ui(pw.get(), l, static_cast<unsigned long>(t), MPFR_RNDN);
        mpfr_ui_div(pw.get(), 1, pw.get(), MPFR_RNDN);
        mpfr_ui_sub(f.get(), 1, pw.get(), MPFR_RNDN);
        mpfr_mul(z.get(), z.get(), f.get(), MPFR_RNDN);
      }
      mpfr_log(z.get(), z.get(), MPFR_RNDN);
      return z;
    };

    const auto d = log_series_coefficients();
    Mpfr tail, coeff, ps;
    double moebius_remainder = 0;
    for (int s = 4; s <= kSeriesTerms; ++s) {
      if (d[s] == 0) continue;
      mpfr_set_zero(ps.get(), 1);
      for (int k = 1; k <= kMoebiusTerms; ++k) {
        const int mu = moebius(k);
        if (mu == 0) continue;
        Mpfr lz = log_zeta_tail(static_cast<long>(k) * s);
        mpfr_div_si(lz.get(), lz.get(), mu * k, MPFR_RNDN);
        mpfr_add(ps.get(), ps.get(), lz.get(), MPFR_RNDN);
      }
      // Dropped k > K terms: each |log zeta_L(t)| <= L^(1-t)/(t-1); the series
      // in k is dominated by twice its first term.
      const double t = static_cast<double>(kMoebiusTerms + 1) * s;
      moebius_remainder += d[s].get_d() * 2 * std::pow(static_cast<double>(L), 1 - t) /
                           ((kMoebiusTerms + 1) * (t - 1));
      set_rational(coeff, d[s]);
      mpfr_mul(ps.get(), ps.get(), coeff.get(), MPFR_RNDN);
      mpfr_sub(tail.get(), tail.get(), ps.get(), MPFR_RNDN);
    }
    // Dropped s > S terms: d_s <= log(6/5) 2^s and P_L(s) <= L^(1-s)/(s-1).
    const double ratio = 2.0 / static_cast<double>(L);
    const double series_remainder = std::log(1.2) * static_cast<double>(L) *
                                    std::pow(ratio, kSeriesTerms + 1) /
                                    (kSeriesTerms * (1 - ratio));
    mpfr_add(cache.log_full.get(), head.get(), tail.get(), MPFR_RNDN);
    // 1e-100 covers accumulated rounding at 512 bits with a wide margin.
    cache.log_bound = series_remainder + moebius_remainder + 1e-100;
  });
  return cache;
}

}  // namespace

BoundedReal cyclic_euler_product(std::span<const std::uint64_t> excluded,
                                 const ExactRational& factor, int precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision) {
    throw DomainError("precision must lie in [4, 30], got " + std::to_string(precision));
  }
  const TailCache& cache = global_cache();
  Mpfr log_value = cache.log_full, term;
  std::vector<std::uint64_t> primes(excluded.begin(), excluded.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t l : primes) {
    if (!numth::is_prime(l)) throw DomainError("cyclic_euler_product: excluded value not prime");
    log_factor(term, l);
    mpfr_sub(log_value.get(), log_value.get(), term.get(), MPFR_RNDN);
  }
  Mpfr value, scale;
  mpfr_exp(value.get(), log_value.get(), MPFR_RNDN);
  set_rational(scale, factor.raw());
  mpfr_mul(value.get(), value.get(), scale.get(), MPFR_RNDN);

  const int digits = precision + 3;
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rf", digits, value.get());

  BoundedReal out;
  out.decimal = buffer.data();
  out.value = mpfr_get_d(value.get(), MPFR_RNDN);
  // |e^delta - 1| <= 1.01 |delta| for the tiny delta at hand, plus the
  // half-unit of the printed decimal.
  out.error_bound = std::fabs(out.value) * cache.log_bound * 1.01 + 0.5 * std::pow(10.0, -digits);
  return out;
}

}  // namespace ecavg::densities
