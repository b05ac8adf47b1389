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


#include "curve/bsgs.hpp"

#include <cmath>
#include <unordered_map>

#include "numth/factored.hpp"

namespace ecavg::curve {

namespace {

std::uint64_t key(const Point& P) { return P.infinity ? UINT64_MAX : (P.x << 32) | P.y; }

// Smallest k in [0, width] with kP = target, or nullopt.
std::optional<std::uint64_t> discrete_log(const CurveModP& c, const Point& P, const Point& target,
                                          std::uint64_t width) {
  const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(width + 1))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  Point R;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(key(R), j);
    R = add(c, R, P);
  }
  const Point step = negate(c, R);  // -mP
  Point G = target;
  for (std::uint64_t i = 0; i * m <= width; ++i) {
    const auto it = baby.find(key(G));
    if (it != baby.end() && i * m + it->second <= width) return i * m + it->second;
    G = add(c, G, step);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t point_order(const CurveModP& c, const Point& P, std::uint64_t multiple) {
  const numth::Factored f = numth::factor(multiple);
  std::uint64_t order = multiple;
  for (const auto& pp : f.factors()) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (!multiply(c, P, order / pp.prime).infinity) break;
      order /= pp.prime;
    }
  }
  return order;
}

std::optional<std::uint64_t> bsgs_point_count(const CurveModP& c, numth::Rng& rng, int attempts) {
  const std::uint64_t p = c.p();
  const double root = std::sqrt(static_cast<double>(p));
  const std::uint64_t lo = p + 1 - static_cast<std::uint64_t>(std::floor(2 * root));
  const std::uint64_t hi = p + 1 + static_cast<std::uint64_t>(std::floor(2 * root));
  for (int i = 0; i < attempts; ++i) {
    const Point P = random_point(c, rng);
    const auto k = discrete_log(c, P, negate(c, multiply(c, P, lo)), hi - lo);
    if (!k) continue;
    const std::uint64_t order = point_order(c, P, lo + *k);
    const std::uint64_t first = (lo + order - 1) / order * order;
    if (first + order > hi) return first;
  }
  return std::nullopt;
}

std::uint64_t fast_point_count(const CurveModP& c, numth::Rng& rng) {
  if (const auto n = bsgs_point_count(c, rng)) return *n;
  return point_count(c);
}

}  // namespace ecavg::curve
