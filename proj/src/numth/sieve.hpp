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
#include <vector>

#include "numth/congruence.hpp"

namespace ecavg::numth {

// Largest bound accepted by the sieve entry points.
inline constexpr std::uint64_t kSieveLimit = 1ULL << 32;

// Primes up to 10^6, built once and shared read-only.
const std::vector<std::uint32_t>& trial_division_primes();

// Primes in [lo, hi] by a segmented sieve of Eratosthenes.
std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi);

inline std::vector<std::uint32_t> primes_up_to(std::uint64_t x) { return primes_between(2, x); }

// Primes p <= x with p = k (mod n), ascending. Requires x >= 2.
std::vector<std::uint32_t> primes_in_class(double x, const CongruenceClass& cc);

// floor(x) for a real bound, validated against the sieve limit.
std::uint64_t bound_floor(double x);

}  // namespace ecavg::numth
