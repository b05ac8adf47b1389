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

// Dense polynomials over F_p, p < 2^32, coefficients lowest degree first.
// Just enough arithmetic for root counting and division polynomials.

#pragma once

#include <cstdint>
#include <vector>

namespace ecavg::curve {

class PolyRing {
 public:
  using Poly = std::vector<std::uint64_t>;

  explicit PolyRing(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }

  static void trim(Poly& f);
  static int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly scale(const Poly& f, std::uint64_t c) const;
  Poly rem(const Poly& f, const Poly& g) const;  // g nonzero
  Poly gcd(Poly f, Poly g) const;                // monic, or empty when both are zero
  Poly mulmod(const Poly& f, const Poly& g, const Poly& m) const { return rem(mul(f, g), m); }
  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const;

  // Number of distinct roots of f in F_p (f nonzero).
  int count_roots(const Poly& f) const;

 private:
  std::uint64_t p_;
};

// The q-division polynomial of y^2 = x^3 + ax + b for odd q, as a polynomial
// in x of degree (q^2 - 1)/2. Its roots are the x-coordinates of the points
// of exact order q over the algebraic closure.
PolyRing::Poly division_polynomial(const PolyRing& ring, unsigned q, std::uint64_t a,
                                   std::uint64_t b);

}  // namespace ecavg::curve
