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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecavg {

// Raised for every precondition violation on a domain operation. The C API
// maps it to ECAVG_ERR_DOMAIN and the CLI to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace numth {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// Reduce a signed value into [0, m).
inline std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt when a is a
// non-residue. No primality check: callers pass primes.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

// Smallest primitive root modulo the prime p.
std::uint64_t primitive_root(std::uint64_t p);

// Smallest quadratic non-residue modulo the odd prime p.
std::uint64_t least_nonresidue(std::uint64_t p);

// Pollard-Brent factor search for a composite n; returns a nontrivial divisor.
std::uint64_t find_divisor(std::uint64_t n);

}  // namespace numth
}  // namespace ecavg
