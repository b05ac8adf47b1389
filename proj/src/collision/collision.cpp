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


#include "collision/collision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "densities/densities.hpp"
#include "numth/factored.hpp"
#include "numth/integer.hpp"
#include "numth/parallel.hpp"

namespace ecavg::collision {

namespace {

void validate_pair(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("S(a|b): a and b must be positive");
  if (b % a != 0) throw DomainError("S(a|b): a = " + std::to_string(a) + " does not divide b = " + std::to_string(b));
  if (!numth::factor(b).squarefree()) throw DomainError("S(a|b): b must be squarefree");
}

}  // namespace

CollisionSearch collision_search(std::uint64_t bound, unsigned threads) {
  if (bound < 2) throw DomainError("collision_search: bound must be at least 2");
  CollisionSearch out;
  out.bound = bound;
  std::vector<std::uint64_t> squarefree;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (numth::factor(n).squarefree()) squarefree.push_back(n);
  }
  out.squarefree_count = squarefree.size();

  std::vector<std::string> keys(squarefree.size());
  numth::parallel_for(squarefree.size(), threads,
                      [&](std::size_t i) { keys[i] = densities::h_value(squarefree[i]).str(); });

  // Exact reduced fractions as keys; no floating point anywhere.
  std::map<std::string, std::vector<std::uint64_t>> groups;
  for (std::size_t i = 0; i < squarefree.size(); ++i) groups[keys[i]].push_back(squarefree[i]);
  out.distinct_values = groups.size();
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (std::gcd(members[i], members[j]) != 1) continue;
        out.collisions.push_back({members[i], members[j], numth::ExactRational::parse(key)});
      }
    }
  }
  std::sort(out.collisions.begin(), out.collisions.end(),
            [](const CollisionRecord& x, const CollisionRecord& y) {
              return x.N != y.N ? x.N < y.N : x.M < y.M;
            });
  return out;
}

mpz_class sl2_order(std::uint64_t n) {
  const numth::Factored f = numth::factor(n);
  mpz_class r = 1;
  for (const auto& pp : f.factors()) {
    mpz_class l = pp.prime, le;
    mpz_pow_ui(le.get_mpz_t(), l.get_mpz_t(), 3 * pp.exponent - 2);
    r *= le * (l * l - 1);
  }
  return r;
}

mpz_class s_cardinality_formula(std::uint64_t a, std::uint64_t b) {
  validate_pair(a, b);
  mpz_class r = sl2_order(b / a);
  const numth::Factored fa = numth::factor(a);
  for (const auto& pp : fa.factors()) {
    const mpz_class l = pp.prime;
    r *= l * l * l - l - 1;
  }
  return r;
}

mpz_class s_cardinality_bruteforce(std::uint64_t a, std::uint64_t b) {
  validate_pair(a, b);
  if (b > kBruteForceMaxB) throw DomainError("s_cardinality_bruteforce: b must be at most 30");
  std::vector<std::uint64_t> primes;
  const numth::Factored fa = numth::factor(a);
  for (const auto& pp : fa.factors()) primes.push_back(pp.prime);
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < b; ++w) {
    for (std::uint64_t x = 0; x < b; ++x) {
      for (std::uint64_t y = 0; y < b; ++y) {
        for (std::uint64_t z = 0; z < b; ++z) {
          if ((w * z + b * b - x * y % b) % b != 1 % b) continue;
          const bool trivial_somewhere = std::any_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
            return w % p == 1 % p && x % p == 0 && y % p == 0 && z % p == 1 % p;
          });
          if (!trivial_somewhere) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace ecavg::collision
