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

// Isomorphism classes of y^2 = x^3 + ax + b over F_p.
//
// For ab != 0 the class of (a, b) is fixed by t = a^3/b^2 together with the
// quadratic character of ab: the p - 1 pairs sharing t are (t l^2, t l^3),
// l in F_p^*, and l runs over squares for the class of (t, t) and over
// non-squares for its quadratic twist. Each such class has (p - 1)/2
// members and t = -27/4 is the singular one. Pairs with a = 0 are classified
// by b modulo sixth powers and pairs with b = 0 by a modulo fourth powers.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "curve/curve.hpp"

namespace ecavg::survey {

struct ClassData {
  std::uint64_t a = 0, b = 0;  // representative
  std::uint64_t order = 0;
  bool cyclic = false;
  bool probabilistic = false;
};

class PrimeClassTable {
 public:
  explicit PrimeClassTable(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::size_t size() const { return reps_.size(); }

  // Class index of (alpha, beta) in [0, size()), or npos when singular.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t classify(std::uint64_t alpha, std::uint64_t beta) const {
    if (alpha == 0 && beta == 0) return npos;
    if (alpha == 0) return 2 * p_ + dlog_[beta] % g6_;
    if (beta == 0) return 2 * p_ + 6 + dlog_[alpha] % g4_;
    const std::uint64_t n = p_ - 1;
    const std::uint64_t da = dlog_[alpha], db = dlog_[beta];
    const std::uint64_t t = pow_[(3 * da + 2 * (n - db)) % n];
    if (t == singular_t_) return npos;
    return 2 * t + ((da + db) & 1);
  }

  // Evaluates whichever classes are flagged and not yet known.
  void evaluate(const std::vector<char>& wanted);
  void evaluate_all();
  bool known(std::size_t index) const { return known_[index] != 0; }
  const ClassData& data(std::size_t index) const { return data_[index]; }

  // The generic classes (ab != 0) as index pairs for (t, t) and its twist.
  std::size_t generic_index(std::uint64_t t, bool twisted) const { return 2 * t + (twisted ? 1 : 0); }
  std::uint64_t singular_t() const { return singular_t_; }

  const std::vector<std::uint32_t>& dlog() const { return dlog_; }
  const std::vector<std::uint32_t>& powers() const { return pow_; }

 private:
  struct Rep {
    std::uint64_t a, b;
    int twin;  // generic classes share one character sum with their twin
  };

  std::uint64_t p_;
  std::uint64_t singular_t_;
  std::uint64_t g6_, g4_;
  std::vector<std::uint32_t> pow_, dlog_;
  std::vector<Rep> reps_;
  std::vector<ClassData> data_;
  std::vector<char> known_;
  std::shared_ptr<const curve::ResidueTable> chi_;
};

struct ClassCounts {
  std::uint64_t p = 0;
  std::uint64_t valid_pairs = 0;  // (a, b) in F_p^* x F_p^*, nonsingular
  std::uint64_t cyclic = 0;
  std::vector<std::uint64_t> m_list;
  std::vector<std::uint64_t> divisible;  // parallel to m_list

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// #C_p and #D_p(m) through the class table: O(p^2).
ClassCounts class_counts(std::uint64_t p, const std::vector<std::uint64_t>& m_list);

// The literal double loop over F_p^* x F_p^*: O(p^3).
ClassCounts class_counts_naive(std::uint64_t p, const std::vector<std::uint64_t>& m_list);

// #{a in Z : |a| <= H, a = alpha (mod p)}.
std::uint64_t box_weight(std::uint64_t H, std::uint64_t alpha, std::uint64_t p);

}  // namespace ecavg::survey
