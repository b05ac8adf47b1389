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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curve/curve.hpp"
#include "numth/congruence.hpp"

namespace ecavg::curve {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z.
class LongModel {
 public:
  LongModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);

  // "a1,a2,a3,a4,a6"; surrounding brackets and spaces are tolerated.
  static LongModel parse(std::string_view text);

  const mpz_class& a1() const { return a_[0]; }
  const mpz_class& a2() const { return a_[1]; }
  const mpz_class& a3() const { return a_[2]; }
  const mpz_class& a4() const { return a_[3]; }
  const mpz_class& a6() const { return a_[4]; }
  const mpz_class& c4() const { return c4_; }
  const mpz_class& c6() const { return c6_; }

  std::string str() const;  // "[a1,a2,a3,a4,a6]"

  // #points on the reduction mod p by direct enumeration of the long
  // equation; O(p^2), for checks only.
  std::uint64_t naive_point_count(std::uint64_t p) const;

 private:
  mpz_class a_[5];
  mpz_class c4_, c6_;
};

// Y^2 = X^3 - 27 c4 X - 54 c6 mod p, or nullopt on bad reduction. Rejects
// p <= 3.
std::optional<CurveModP> reduce_to_short(const LongModel& model, std::uint64_t p);

struct CensusResult {
  numth::CongruenceClass cc;
  std::vector<std::uint64_t> m_list;
  std::vector<std::uint32_t> good_primes;  // examined, ascending
  std::vector<std::uint32_t> bad_primes;   // skipped, ascending
  std::uint64_t cyclic = 0;
  std::vector<std::uint64_t> divisible;  // parallel to m_list
  bool probabilistic = false;            // some Sylow test was randomized
};

// Cyclicity and m | #E(F_p) counts over good primes 3 < p <= x in cc.
CensusResult individual_census(const LongModel& model, double x, const numth::CongruenceClass& cc,
                               const std::vector<std::uint64_t>& m_list);

}  // namespace ecavg::curve
