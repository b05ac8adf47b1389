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
#include <numeric>
#include <string>
#include <vector>

#include "numth/integer.hpp"

namespace ecavg::numth {

// A unit residue class k mod n, stored with k in [1, n]. n = 1 means "no
// congruence condition" and forces k = 1.
class CongruenceClass {
 public:
  CongruenceClass() = default;

  // Accepts any integer k and normalizes it into [1, n].
  CongruenceClass(std::uint64_t n, std::int64_t k) : n_(n) {
    if (n == 0) throw DomainError("CongruenceClass: modulus must be positive");
    std::uint64_t r = reduce(k, n);
    k_ = r == 0 ? n : r;
    if (std::gcd(k_, n_) != 1) {
      throw DomainError("CongruenceClass: gcd(" + std::to_string(k) + ", " + std::to_string(n) +
                        ") != 1");
    }
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t k() const { return k_; }

  bool contains(std::uint64_t value) const { return value % n_ == k_ % n_; }

  std::string str() const { return std::to_string(k_) + " mod " + std::to_string(n_); }

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
  friend auto operator<=>(const CongruenceClass&, const CongruenceClass&) = default;

 private:
  std::uint64_t n_ = 1;
  std::uint64_t k_ = 1;
};

// All unit classes modulo n in increasing order of k.
inline std::vector<CongruenceClass> unit_classes(std::uint64_t n) {
  std::vector<CongruenceClass> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) out.emplace_back(n, static_cast<std::int64_t>(k));
  }
  return out;
}

// The unique a in [1, n*d] with a = k (mod n) and a = 1 (mod d).
std::uint64_t crt_lift(const CongruenceClass& cc, std::uint64_t d);

}  // namespace ecavg::numth
