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

#include "densities/densities.hpp"

namespace ecavg::densities {

// prod over primes l not in `excluded` of (1 - 1/((l-1) l (l^2-1))), to
// `precision` decimal digits with a rigorous bound.
//
// Primes up to kEulerCutoff are multiplied directly. The tail is
//   log T = -sum_{s>=4} d_s P_L(s),   P_L(s) = sum_{l > L} l^-s,
// where d_s are the (nonnegative) coefficients of -log(1 - u^4/((1-u)^2(1+u)))
// and P_L(s) comes from the Moebius inversion of log zeta_L(s), zeta_L the
// zeta function with its Euler factors up to L removed. Positivity gives
// d_s <= log(6/5) 2^s, which bounds the truncated series.
// The result is multiplied exactly by `factor` before rounding.
BoundedReal cyclic_euler_product(std::span<const std::uint64_t> excluded,
                                 const ExactRational& factor, int precision);

inline constexpr std::uint64_t kEulerCutoff = 1000;

}  // namespace ecavg::densities
