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

#include "numth/factored.hpp"

#include <algorithm>
#include <map>

#include "numth/integer.hpp"
#include "numth/sieve.hpp"

namespace ecavg::numth {

Factored::Factored(std::uint64_t value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {}

std::uint64_t Factored::phi() const {
  std::uint64_t r = value_;
  for (const auto& f : factors_) r = r / f.prime * (f.prime - 1);
  return r;
}

std::uint64_t Factored::radical() const {
  std::uint64_t r = 1;
  for (const auto& f : factors_) r *= f.prime;
  return r;
}

bool Factored::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

unsigned Factored::valuation(std::uint64_t prime) const {
  for (const auto& f : factors_) {
    if (f.prime == prime) return f.exponent;
  }
  return 0;
}

Factored Factored::lcm(const Factored& other) const {
  std::map<std::uint64_t, unsigned> merged;
  for (const auto& f : factors_) merged[f.prime] = f.exponent;
  for (const auto& f : other.factors_) {
    auto& e = merged[f.prime];
    e = std::max(e, f.exponent);
  }
  std::vector<PrimePower> out;
  unsigned __int128 v = 1;
  for (const auto& [p, e] : merged) {
    for (unsigned i = 0; i < e; ++i) {
      v *= p;
      if (v > UINT64_MAX) throw DomainError("Factored::lcm: result exceeds 64 bits");
    }
    out.push_back({p, e});
  }
  return Factored(static_cast<std::uint64_t>(v), std::move(out));
}

std::string Factored::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    s += std::to_string(f.prime);
    if (f.exponent > 1) s += '^' + std::to_string(f.exponent);
  }
  return s;
}

namespace {

void split_cofactor(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = find_divisor(n);
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

}  // namespace

Factored factor(std::uint64_t n) {
  if (n == 0) throw DomainError("factor: n must be positive");
  const std::uint64_t original = n;
  std::vector<PrimePower> out;
  for (std::uint32_t q : trial_division_primes()) {
    if (static_cast<std::uint64_t>(q) * q > n) break;
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (n > 1) {
    std::vector<std::uint64_t> rest;
    split_cofactor(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::uint64_t p : rest) {
      if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
      } else {
        out.push_back({p, 1});
      }
    }
  }
  return Factored(original, std::move(out));
}

std::vector<std::uint64_t> squarefree_divisors(const Factored& n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& f : n.factors()) {
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * f.prime);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace ecavg::numth
