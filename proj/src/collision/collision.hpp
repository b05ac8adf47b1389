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


// Coincidences h(N) = h(M) among coprime squarefree integers, and the sizes
// of the sets S(a|b) of matrices in SL_2(Z/bZ) that are nontrivial modulo
// every prime dividing a.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "numth/rational.hpp"

namespace ecavg::collision {

struct CollisionRecord {
  std::uint64_t N = 0, M = 0;  // N < M, coprime, squarefree
  numth::ExactRational shared_h;

  friend bool operator==(const CollisionRecord&, const CollisionRecord&) = default;
};

struct CollisionSearch {
  std::uint64_t bound = 0;
  std::uint64_t squarefree_count = 0;
  std::uint64_t distinct_values = 0;
  std::vector<CollisionRecord> collisions;  // sorted by (N, M)
};

// Groups every squarefree n <= bound by the reduced fraction h(n).
CollisionSearch collision_search(std::uint64_t bound, unsigned threads = 0);

// |SL_2(Z/nZ)| for squarefree n.
mpz_class sl2_order(std::uint64_t n);

// |SL_2(Z/(b/a))| * prod_{l | a} (l^3 - l - 1); a | b, both squarefree.
mpz_class s_cardinality_formula(std::uint64_t a, std::uint64_t b);

// Literal enumeration over SL_2(Z/bZ); b <= 30.
mpz_class s_cardinality_bruteforce(std::uint64_t a, std::uint64_t b);

inline constexpr std::uint64_t kBruteForceMaxB = 30;

}  // namespace ecavg::collision
