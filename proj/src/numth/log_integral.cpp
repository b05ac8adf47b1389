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

#include "numth/log_integral.hpp"

#include <cmath>
#include <string>

#include "numth/integer.hpp"

namespace ecavg::numth {

namespace {

using Real = long double;

// Integrand after t = e^u: dt / log t = e^u / u du.
Real integrand(Real u) { return std::exp(u) / u; }

Real simpson(Real a, Real b, Real fa, Real fm, Real fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

Real adaptive(Real a, Real b, Real fa, Real fm, Real fb, Real whole, Real eps, int depth) {
  const Real m = (a + b) / 2;
  const Real lm = (a + m) / 2, rm = (m + b) / 2;
  const Real flm = integrand(lm), frm = integrand(rm);
  const Real left = simpson(a, m, fa, flm, fm);
  const Real right = simpson(m, b, fm, frm, fb);
  const Real delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15 * eps) return left + right + delta / 15;
  return adaptive(a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         adaptive(m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

}  // namespace

double log_integral(double x) {
  if (!(x >= 2)) throw DomainError("log_integral: x must be at least 2, got " + std::to_string(x));
  if (x == 2) return 0.0;
  const Real a = std::log(2.0L), b = std::log(static_cast<Real>(x));
  // Unit-length pieces keep the per-piece tolerance meaningful for large x.
  const int pieces = static_cast<int>(std::ceil(b - a)) * 4;
  const Real h = (b - a) / pieces;
  const Real eps = static_cast<Real>(kLogIntegralTolerance) / 10 / pieces;
  Real total = 0;
  for (int i = 0; i < pieces; ++i) {
    const Real lo = a + h * i, hi = i + 1 == pieces ? b : a + h * (i + 1);
    const Real flo = integrand(lo), fhi = integrand(hi), fmid = integrand((lo + hi) / 2);
    total += adaptive(lo, hi, flo, fmid, fhi, simpson(lo, hi, flo, fmid, fhi), eps, 40);
  }
  return static_cast<double>(total);
}

}  // namespace ecavg::numth
