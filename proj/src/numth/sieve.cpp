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

#include "numth/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace ecavg::numth {

namespace {

constexpr std::uint64_t kSegment = 1 << 18;

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

const std::vector<std::uint32_t>& trial_division_primes() {
  static const std::vector<std::uint32_t> primes = simple_sieve(1000000);
  return primes;
}

std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  if (hi >= kSieveLimit) throw DomainError("primes_between: bound exceeds 2^32");
  lo = std::max<std::uint64_t>(lo, 2);
  std::vector<std::uint32_t> out;
  if (hi < lo) return out;

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi))) + 1;
  const std::vector<std::uint32_t> base = root <= 1000000 ? std::vector<std::uint32_t>()
                                                          : simple_sieve(root);
  const std::vector<std::uint32_t>& sieving = root <= 1000000 ? trial_division_primes() : base;

  std::vector<char> segment(kSegment);
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint32_t q : sieving) {
      const std::uint64_t qq = static_cast<std::uint64_t>(q) * q;
      if (qq > end) break;
      std::uint64_t first = std::max(qq, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= end; j += q) segment[j - start] = 0;
    }
    for (std::uint64_t v = start; v <= end; ++v) {
      if (segment[v - start]) out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

std::uint64_t bound_floor(double x) {
  if (!(x >= 0) || x >= static_cast<double>(kSieveLimit)) {
    throw DomainError("bound out of range: " + std::to_string(x));
  }
  return static_cast<std::uint64_t>(std::floor(x));
}

std::vector<std::uint32_t> primes_in_class(double x, const CongruenceClass& cc) {
  if (!(x >= 2)) throw DomainError("primes_in_class: x must be at least 2");
  std::vector<std::uint32_t> all = primes_up_to(bound_floor(x));
  if (cc.n() == 1) return all;
  std::erase_if(all, [&](std::uint32_t p) { return !cc.contains(p); });
  return all;
}

std::uint64_t crt_lift(const CongruenceClass& cc, std::uint64_t d) {
  if (d == 0) throw DomainError("crt_lift: d must be positive");
  if (std::gcd(d, cc.n()) != 1) {
    throw DomainError("crt_lift: gcd(d, n) != 1 for d = " + std::to_string(d));
  }
  const std::uint64_t n = cc.n();
  const std::uint64_t nd = n * d;
  if (d == 1) return cc.k();
  // a = k + n * t with n * t = 1 - k (mod d).
  const std::uint64_t target = reduce(1 - static_cast<std::int64_t>(cc.k() % d), d);
  const std::uint64_t t = mulmod(target, inverse_mod(n % d, d), d);
  std::uint64_t a = (cc.k() + n * t) % nd;
  return a == 0 ? nd : a;
}

}  // namespace ecavg::numth
