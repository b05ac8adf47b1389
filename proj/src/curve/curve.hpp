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

// Short Weierstrass curves y^2 = x^3 + ax + b over F_p, p > 3 prime.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numth/random.hpp"

namespace ecavg::curve {

// Bound below which group_shape and large-q torsion counts scan every point.
inline constexpr std::uint64_t kDeterministicBound = 10000;
// Random points drawn by the Sylow tests above kDeterministicBound.
inline constexpr int kSylowSamples = 40;
// Largest odd q handled through the q-division polynomial.
inline constexpr unsigned kDivisionPolynomialMaxQ = 13;

class CurveModP {
 public:
  // Reduces a and b into [0, p); rejects p <= 3, composite p and singular
  // curves.
  CurveModP(std::uint64_t p, std::int64_t a, std::int64_t b);

  std::uint64_t p() const { return p_; }
  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }

  // 4a^3 + 27b^2 mod p.
  static std::uint64_t discriminant(std::uint64_t p, std::uint64_t a, std::uint64_t b);

  // The twist by u: (u^2 a, u^3 b).
  CurveModP twist(std::uint64_t u) const;

  std::string str() const;

  friend bool operator==(const CurveModP&, const CurveModP&) = default;

 private:
  std::uint64_t p_, a_, b_;
};

struct Point {
  std::uint64_t x = 0, y = 0;
  bool infinity = true;

  friend bool operator==(const Point&, const Point&) = default;
};

Point add(const CurveModP& c, const Point& P, const Point& Q);
Point negate(const CurveModP& c, const Point& P);
Point multiply(const CurveModP& c, Point P, std::uint64_t k);
bool on_curve(const CurveModP& c, const Point& P);

// Every point of E(F_p), the point at infinity first.
std::vector<Point> all_points(const CurveModP& c);

// A uniformly random affine point (the curve has at least one for p > 3).
Point random_point(const CurveModP& c, numth::Rng& rng);

// Quadratic characters of F_p, built once per prime and shared read-only.
class ResidueTable {
 public:
  explicit ResidueTable(std::uint64_t p);
  std::uint64_t p() const { return p_; }
  int chi(std::uint64_t v) const { return table_[v]; }
  const std::vector<std::int8_t>& raw() const { return table_; }

 private:
  std::uint64_t p_;
  std::vector<std::int8_t> table_;
};

// Shared table for p; cached per thread.
std::shared_ptr<const ResidueTable> residue_table(std::uint64_t p);

// sum over x of chi(x^3 + ax + b); the point count is p + 1 + this.
std::int64_t character_sum(const ResidueTable& t, std::uint64_t a, std::uint64_t b);

// #E(F_p) by the Legendre-symbol sum. Hasse's bound is asserted.
std::uint64_t point_count(const CurveModP& c);
std::uint64_t point_count(const CurveModP& c, const ResidueTable& t);

struct GroupShape {
  std::uint64_t d = 1, e = 1, order = 1;
  bool probabilistic = false;  // a randomized Sylow test was involved

  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

// #{P : qP = O} given N = #E(F_p). Deterministic except for odd
// q > kDivisionPolynomialMaxQ with p > kDeterministicBound, where a seeded
// Sylow test (seeded from the curve when rng is null) is used and *random
// is set when provided.
std::uint64_t torsion_count(const CurveModP& c, std::uint64_t q, std::uint64_t order,
                            numth::Rng* rng = nullptr, bool* random = nullptr);

// True iff E(F_p) is cyclic; *random reports whether a Sylow test was
// randomized.
bool is_cyclic(const CurveModP& c, std::uint64_t order, bool* random = nullptr);
bool is_cyclic(const CurveModP& c);

GroupShape group_shape(const CurveModP& c, numth::Rng* rng = nullptr);

// arccos(a_p / (2 sqrt p)) in [0, pi].
double frobenius_angle(std::uint64_t p, std::uint64_t order);
double frobenius_angle(const CurveModP& c);

}  // namespace ecavg::curve
