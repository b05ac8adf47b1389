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

#include "densities/densities.hpp"

#include <numeric>
#include <vector>

#include "densities/euler_product.hpp"
#include "numth/integer.hpp"

namespace ecavg::densities {

namespace {

mpz_class pow_z(std::uint64_t base, unsigned exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// 1 - 1/(q(q^2-1)) = 1 + g(q).
ExactRational one_plus_g(std::uint64_t q) {
  const mpz_class sl2 = mpz_class(q) * (mpz_class(q) * q - 1);
  return ExactRational(sl2 - 1, sl2);
}

ExactRational omega_prime_power(std::uint64_t r, std::uint64_t q, unsigned j) {
  const unsigned half_up = (j + 1) / 2, half_down = j / 2;
  const std::uint64_t modulus = pow_z(q, half_up).get_ui();
  if (r % modulus != 1 % modulus) {
    return ExactRational(mpz_class(1), pow_z(q, j - 1) * (q - 1));
  }
  const mpz_class num = pow_z(q, half_down + 1) + pow_z(q, half_down) - 1;
  const mpz_class den = pow_z(q, j + half_down - 1) * (mpz_class(q) * q - 1);
  return ExactRational(num, den);
}

}  // namespace

void DensityQuery::validate() const {
  if (precision < kMinPrecision || precision > kMaxPrecision) {
    throw DomainError("precision must lie in [4, 30], got " + std::to_string(precision));
  }
  if (m == 0) throw DomainError("m must be positive");
}

Factored underline_m(std::uint64_t m) {
  const Factored f = numth::factor(m);
  std::vector<numth::PrimePower> out;
  std::uint64_t value = 1;
  for (const auto& pp : f.factors()) {
    const unsigned e = (pp.exponent + 1) / 2;
    for (unsigned i = 0; i < e; ++i) value *= pp.prime;
    out.push_back({pp.prime, e});
  }
  return Factored(value, std::move(out));
}

ExactRational g_value(std::uint64_t d) {
  const Factored f = numth::factor(d);
  ExactRational r(1);
  for (const auto& pp : f.factors()) {
    if (pp.exponent >= 2) return ExactRational(0);
    r *= one_plus_g(pp.prime) - ExactRational(1);
  }
  return r;
}

ExactRational omega_r(std::int64_t r, std::uint64_t m) {
  const Factored mf = numth::factor(m);
  const std::uint64_t mbar = underline_m(m).value();
  const std::uint64_t residue = numth::reduce(r, mbar);
  if (std::gcd(residue, mbar) != 1) {
    throw DomainError("omega_r: r = " + std::to_string(r) + " is not a unit modulo " +
                      std::to_string(mbar));
  }
  ExactRational out(1);
  for (const auto& pp : mf.factors()) out *= omega_prime_power(residue, pp.prime, pp.exponent);
  return out;
}

ExactRational h_value(std::uint64_t n) {
  const Factored f = numth::factor(n);
  if (!f.squarefree()) throw DomainError("h_value: " + std::to_string(n) + " is not squarefree");
  ExactRational r(1);
  for (const auto& pp : f.factors()) r *= one_plus_g(pp.prime);
  return r;
}

ExactRational vartheta(std::uint64_t p) {
  if (!numth::is_prime(p)) throw DomainError("vartheta: " + std::to_string(p) + " is not prime");
  return h_value(numth::factor(p - 1).radical());
}

ExactRational cyclic_finite_part(const CongruenceClass& cc) {
  const std::uint64_t g = std::gcd(cc.n(), cc.k() - 1);
  const Factored gf = numth::factor(g);
  ExactRational r(1);
  for (const auto& pp : gf.factors()) r *= one_plus_g(pp.prime);
  return r;
}

BoundedReal cyclic_density_global(int precision) {
  return cyclic_euler_product({}, ExactRational(1), precision);
}

CyclicDensity cyclic_density_ap(const DensityQuery& q) {
  q.validate();
  const Factored nf = numth::factor(q.cc.n());
  std::vector<std::uint64_t> excluded;
  for (const auto& pp : nf.factors()) excluded.push_back(pp.prime);
  CyclicDensity out;
  out.finite_part = cyclic_finite_part(q.cc);
  const ExactRational phi(static_cast<long>(nf.phi()));
  out.euler_part = cyclic_euler_product(excluded, ExactRational(1), q.precision);
  out.scaled = cyclic_euler_product(excluded, out.finite_part, q.precision);
  out.value = cyclic_euler_product(excluded, out.finite_part / phi, q.precision);
  return out;
}

ExactRational divisibility_density_global(std::uint64_t m) {
  if (m == 0) throw DomainError("divisibility_density_global: m must be positive");
  const std::uint64_t mbar = underline_m(m).value();
  std::vector<ExactRational> terms;
  for (std::uint64_t r = 1; r <= mbar; ++r) {
    if (std::gcd(r, mbar) == 1) terms.push_back(omega_r(static_cast<std::int64_t>(r), m));
  }
  return sum(terms) / ExactRational(static_cast<long>(terms.size()));
}

ExactRational divisibility_density_ap(const DensityQuery& q) {
  if (q.m == 0) throw DomainError("divisibility_density_ap: m must be positive");
  const Factored mbar = underline_m(q.m);
  const Factored big_m = numth::factor(q.cc.n()).lcm(mbar);
  const std::uint64_t M = big_m.value();
  std::vector<ExactRational> terms;
  for (std::uint64_t r = q.cc.k(); r <= M; r += q.cc.n()) {
    if (std::gcd(r, M) == 1) terms.push_back(omega_r(static_cast<std::int64_t>(r), q.m));
  }
  return sum(terms) / ExactRational(static_cast<long>(big_m.phi()));
}

}  // namespace ecavg::densities
