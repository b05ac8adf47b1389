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
#include <span>
#include <string>
#include <vector>

namespace ecavg::numth {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer carried together with its factorization. Primes are
// strictly increasing and every exponent is at least one.
class Factored {
 public:
  Factored() = default;  // the integer 1

  // Trusted constructor: `factors` must already satisfy the invariants.
  Factored(std::uint64_t value, std::vector<PrimePower> factors);

  std::uint64_t value() const { return value_; }
  std::span<const PrimePower> factors() const { return factors_; }

  std::uint64_t phi() const;
  std::uint64_t radical() const;
  bool squarefree() const;
  // Exponent of `prime` in the factorization (0 when absent).
  unsigned valuation(std::uint64_t prime) const;
  bool divides(std::uint64_t other) const { return other % value_ == 0; }

  // Least common multiple; throws DomainError on 64-bit overflow.
  Factored lcm(const Factored& other) const;

  std::string str() const;  // e.g. "2^2*3"

  friend bool operator==(const Factored&, const Factored&) = default;

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

// Full prime factorization; rejects n = 0.
Factored factor(std::uint64_t n);

// Squarefree divisors of rad(n) in increasing order.
std::vector<std::uint64_t> squarefree_divisors(const Factored& n);

}  // namespace ecavg::numth
