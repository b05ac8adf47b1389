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


// Baby-step giant-step order finding in the Hasse interval, an optional fast
// path for point counting in sampled surveys.

#pragma once

#include <cstdint>
#include <optional>

#include "curve/curve.hpp"
#include "numth/random.hpp"

namespace ecavg::curve {

// Order of P, given some multiple of it.
std::uint64_t point_order(const CurveModP& c, const Point& P, std::uint64_t multiple);

// #E(F_p) when some random point has a unique multiple of its order in
// [p + 1 - 2 sqrt p, p + 1 + 2 sqrt p]; nullopt after `attempts` ambiguous
// points.
std::optional<std::uint64_t> bsgs_point_count(const CurveModP& c, numth::Rng& rng, int attempts = 4);

// bsgs_point_count, falling back to the Legendre sum on ambiguity.
std::uint64_t fast_point_count(const CurveModP& c, numth::Rng& rng);

}  // namespace ecavg::curve
