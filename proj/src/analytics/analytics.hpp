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

// Exact prime sums of vartheta_p and omega_p(m) over a progression, their
// li(x) main terms, and the exact identity
//   sum_{p <= x, p = k (n)} vartheta_p
//     = prod_{l' | (n, k-1)} (1 + g(l')) * sum_{d} g(d) pi(x; nd, a(n, d)),
// d over squarefree integers coprime to n and a(n, d) the CRT lift of
// (k mod n, 1 mod d).

#pragma once

#include <cstdint>

#include "densities/densities.hpp"
#include "numth/congruence.hpp"
#include "numth/rational.hpp"

namespace ecavg::analytics {

using densities::BoundedReal;
using numth::CongruenceClass;
using numth::ExactRational;

struct PrimeSumResult {
  ExactRational exact_sum;
  BoundedReal predicted;
  double relative_gap = 0;  // |exact - predicted| / predicted
  std::uint64_t terms = 0;  // primes contributing
};

ExactRational sum_vartheta_exact(double x, const CongruenceClass& cc);
BoundedReal predicted_cyclic_sum(double x, const CongruenceClass& cc);
PrimeSumResult cyclic_prime_sum(double x, const CongruenceClass& cc);

// Primes dividing m are skipped: omega_p(m) is only defined for p prime to m.
ExactRational sum_omega_exact(double x, const CongruenceClass& cc, std::uint64_t m);
BoundedReal predicted_divisibility_sum(double x, const CongruenceClass& cc, std::uint64_t m);
PrimeSumResult divisibility_prime_sum(double x, const CongruenceClass& cc, std::uint64_t m);

struct TnkCheck {
  ExactRational left, right;
  bool equal = false;
  std::uint64_t divisors = 0;  // d with a nonzero prime count
};

// Both sides exactly. The right side runs over d <= x: a prime p counted by
// pi(x; nd, a(n, d)) has d | p - 1, so larger d contribute nothing.
TnkCheck tnk_identity_check(double x, const CongruenceClass& cc);

}  // namespace ecavg::analytics
