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

// Average cyclicity and m-divisibility densities, their multiplicative
// building blocks, and h(N). Every finite expression is an ExactRational;
// only the infinite Euler products are BoundedReal.

#pragma once

#include <cstdint>
#include <string>

#include "numth/congruence.hpp"
#include "numth/factored.hpp"
#include "numth/rational.hpp"

namespace ecavg::densities {

using numth::CongruenceClass;
using numth::ExactRational;
using numth::Factored;

// A real number together with a guaranteed enclosure radius: the true value
// lies in [value - error_bound, value + error_bound].
struct BoundedReal {
  std::string decimal;  // value rendered with enough digits for the bound
  double value = 0;
  double error_bound = 0;

  friend bool operator==(const BoundedReal&, const BoundedReal&) = default;
};

inline constexpr int kMinPrecision = 4;
inline constexpr int kMaxPrecision = 30;

struct DensityQuery {
  CongruenceClass cc;
  std::uint64_t m = 1;
  int precision = 10;

  void validate() const;  // precision in [4, 30], m >= 1
};

// m̲ = prod over q^j || m of q^ceil(j/2).
Factored underline_m(std::uint64_t m);

// Multiplicative: g(q) = -1/(q(q^2-1)), g(q^j) = 0 for j >= 2, g(1) = 1.
ExactRational g_value(std::uint64_t d);

// omega_r(m); r must be a unit modulo m̲.
ExactRational omega_r(std::int64_t r, std::uint64_t m);

// prod over primes q | p-1 of (1 - 1/(q(q^2-1))); p must be prime.
ExactRational vartheta(std::uint64_t p);

// prod over primes l | N of (1 - 1/(l(l^2-1))); N must be squarefree.
ExactRational h_value(std::uint64_t n);

// prod over primes l' | gcd(n, k-1) of (1 + g(l')).
ExactRational cyclic_finite_part(const CongruenceClass& cc);

// The global constant C^C = prod_q (1 - 1/(q(q-1)(q^2-1))).
BoundedReal cyclic_density_global(int precision);

struct CyclicDensity {
  ExactRational finite_part;  // prod over l' | (n, k-1) of (1 + g(l'))
  BoundedReal euler_part;     // prod over l not dividing n of (1 + g(l)/phi(l))
  BoundedReal value;          // C^C_{n,k}
  BoundedReal scaled;         // phi(n) * C^C_{n,k}
};

CyclicDensity cyclic_density_ap(const DensityQuery& q);

// C^D(m): average of omega_r(m) over units r modulo m̲.
ExactRational divisibility_density_global(std::uint64_t m);

// C^D(m)_{n,k}: (1/phi(M)) sum of omega_r(m) over units r mod M = lcm(n, m̲)
// with r = k (mod n).
ExactRational divisibility_density_ap(const DensityQuery& q);

}  // namespace ecavg::densities
