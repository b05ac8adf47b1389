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

#include "analytics/analytics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "numth/integer.hpp"
#include "numth/log_integral.hpp"
#include "numth/sieve.hpp"

namespace ecavg::analytics {

namespace {

std::string render(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// li(x) * c for an exactly known or bounded constant c.
BoundedReal scale_li(double x, double c, double c_bound) {
  const double li = numth::log_integral(x);
  BoundedReal out;
  out.value = li * c;
  // Quadrature tolerance, double rounding of li, and the bound on c.
  const double li_bound = numth::kLogIntegralTolerance + 4e-16 * li;
  out.error_bound = std::fabs(c) * li_bound + li * c_bound + 4e-16 * std::fabs(out.value);
  out.decimal = render(out.value);
  return out;
}

double relative_gap(const ExactRational& exact, const BoundedReal& predicted) {
  return predicted.value > 0 ? std::fabs(exact.to_double() - predicted.value) / predicted.value : 0;
}

}  // namespace

ExactRational sum_vartheta_exact(double x, const CongruenceClass& cc) {
  std::vector<ExactRational> terms;
  for (std::uint32_t p : numth::primes_in_class(x, cc)) terms.push_back(densities::vartheta(p));
  return numth::sum(terms);
}

BoundedReal predicted_cyclic_sum(double x, const CongruenceClass& cc) {
  const auto density = densities::cyclic_density_ap({cc, 1, 16});
  return scale_li(x, density.value.value, density.value.error_bound);
}

PrimeSumResult cyclic_prime_sum(double x, const CongruenceClass& cc) {
  PrimeSumResult r;
  r.exact_sum = sum_vartheta_exact(x, cc);
  r.predicted = predicted_cyclic_sum(x, cc);
  r.relative_gap = relative_gap(r.exact_sum, r.predicted);
  r.terms = numth::primes_in_class(x, cc).size();
  return r;
}

ExactRational sum_omega_exact(double x, const CongruenceClass& cc, std::uint64_t m) {
  if (m == 0) throw DomainError("sum_omega_exact: m must be positive");
  const std::uint64_t mbar = densities::underline_m(m).value();
  std::vector<ExactRational> terms;
  for (std::uint32_t p : numth::primes_in_class(x, cc)) {
    if (std::gcd<std::uint64_t>(p, mbar) != 1) continue;
    terms.push_back(densities::omega_r(p, m));
  }
  return numth::sum(terms);
}

BoundedReal predicted_divisibility_sum(double x, const CongruenceClass& cc, std::uint64_t m) {
  const ExactRational c = densities::divisibility_density_ap({cc, m, 10});
  // Converting c to double costs at most half an ulp.
  return scale_li(x, c.to_double(), 1.2e-16 * c.to_double());
}

PrimeSumResult divisibility_prime_sum(double x, const CongruenceClass& cc, std::uint64_t m) {
  PrimeSumResult r;
  r.exact_sum = sum_omega_exact(x, cc, m);
  r.predicted = predicted_divisibility_sum(x, cc, m);
  r.relative_gap = relative_gap(r.exact_sum, r.predicted);
  const std::uint64_t mbar = densities::underline_m(m).value();
  for (std::uint32_t p : numth::primes_in_class(x, cc)) r.terms += std::gcd<std::uint64_t>(p, mbar) == 1;
  return r;
}

TnkCheck tnk_identity_check(double x, const CongruenceClass& cc) {
  TnkCheck out;
  out.left = sum_vartheta_exact(x, cc);

  const std::uint64_t X = numth::bound_floor(x);
  std::vector<char> is_prime(X + 1, 0);
  for (std::uint32_t p : numth::primes_up_to(X)) is_prime[p] = 1;

  // Smallest prime factor table gives squarefreeness and g(d) cheaply.
  std::vector<std::uint32_t> spf(X + 1, 0);
  for (std::uint64_t i = 2; i <= X; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= X; j += i) {
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
  }

  const std::uint64_t n = cc.n();
  std::vector<ExactRational> terms;
  for (std::uint64_t d = 1; d <= X; ++d) {
    if (std::gcd(d, n) != 1) continue;
    ExactRational g(1);
    bool squarefree = true;
    for (std::uint64_t r = d; r > 1;) {
      const std::uint64_t q = spf[r];
      r /= q;
      if (r % q == 0) {
        squarefree = false;
        break;
      }
      g *= ExactRational(mpz_class(-1), mpz_class(q) * (mpz_class(q) * q - 1));
    }
    if (!squarefree) continue;
    const std::uint64_t modulus = n * d;
    std::uint64_t count = 0;
    for (std::uint64_t a = numth::crt_lift(cc, d); a <= X; a += modulus) count += is_prime[a];
    if (count == 0) continue;
    ++out.divisors;
    terms.push_back(g * ExactRational(static_cast<long>(count)));
  }
  out.right = densities::cyclic_finite_part(cc) * numth::sum(terms);
  out.equal = out.left == out.right;
  return out;
}

}  // namespace ecavg::analytics
