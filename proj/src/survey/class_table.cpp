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

#include "survey/class_table.hpp"

#include <numeric>
#include <stdexcept>

#include "numth/integer.hpp"

namespace ecavg::survey {

namespace {

constexpr int kUnused = -2;
constexpr int kSingle = -1;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

void validate_m_list(const std::vector<std::uint64_t>& m_list) {
  for (std::uint64_t m : m_list) {
    if (m == 0) throw DomainError("m must be positive");
  }
}

}  // namespace

PrimeClassTable::PrimeClassTable(std::uint64_t p) : p_(p) {
  if (p <= 3 || !numth::is_prime(p)) {
    throw DomainError("class table: p must be a prime > 3, got " + std::to_string(p));
  }
  const std::uint64_t g = numth::primitive_root(p);
  pow_.resize(p - 1);
  dlog_.assign(p, 0);
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    pow_[i] = static_cast<std::uint32_t>(v);
    dlog_[v] = static_cast<std::uint32_t>(i);
    v = numth::mulmod(v, g, p);
  }
  singular_t_ = numth::mulmod(p - 27 % p, numth::inverse_mod(4, p), p);
  g6_ = std::gcd<std::uint64_t>(6, p - 1);
  g4_ = std::gcd<std::uint64_t>(4, p - 1);

  const std::uint64_t c = numth::least_nonresidue(p);
  const std::uint64_t c2 = numth::mulmod(c, c, p), c3 = numth::mulmod(c2, c, p);
  reps_.assign(2 * p + 10, Rep{0, 0, kUnused});
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t == singular_t_) continue;
    reps_[2 * t] = {t, t, static_cast<int>(2 * t + 1)};
    reps_[2 * t + 1] = {numth::mulmod(c2, t, p), numth::mulmod(c3, t, p), static_cast<int>(2 * t)};
  }
  for (std::uint64_t i = 0; i < g6_; ++i) reps_[2 * p + i] = {0, pow_[i], kSingle};
  for (std::uint64_t i = 0; i < g4_; ++i) reps_[2 * p + 6 + i] = {pow_[i], 0, kSingle};
  data_.resize(reps_.size());
  known_.assign(reps_.size(), 0);
  chi_ = curve::residue_table(p);
}

void PrimeClassTable::evaluate(const std::vector<char>& wanted) {
  const auto hasse = [this](std::int64_t s) {
    if (s * s > 4 * static_cast<std::int64_t>(p_)) throw std::logic_error("class table: Hasse bound violated");
  };
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (!wanted[i] || known_[i] || reps_[i].twin == kUnused) continue;
    const Rep& r = reps_[i];
    const std::int64_t s = curve::character_sum(*chi_, r.a, r.b);
    hasse(s);
    const std::uint64_t order = static_cast<std::uint64_t>(static_cast<std::int64_t>(p_) + 1 + s);
    bool random = false;
    const bool cyclic = curve::is_cyclic(curve::CurveModP(p_, r.a, r.b), order, &random);
    data_[i] = {r.a, r.b, order, cyclic, random};
    known_[i] = 1;
    if (r.twin >= 0 && !known_[r.twin]) {
      const Rep& t = reps_[r.twin];
      const std::uint64_t twin_order = 2 * p_ + 2 - order;
      const bool twin_cyclic = curve::is_cyclic(curve::CurveModP(p_, t.a, t.b), twin_order, &random);
      data_[r.twin] = {t.a, t.b, twin_order, twin_cyclic, random};
      known_[r.twin] = 1;
    }
  }
}

void PrimeClassTable::evaluate_all() { evaluate(std::vector<char>(reps_.size(), 1)); }

ClassCounts class_counts(std::uint64_t p, const std::vector<std::uint64_t>& m_list) {
  validate_m_list(m_list);
  PrimeClassTable table(p);
  std::vector<char> wanted(table.size(), 0);
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t != table.singular_t()) wanted[table.generic_index(t, false)] = 1;
  }
  table.evaluate(wanted);
  ClassCounts out;
  out.p = p;
  out.m_list = m_list;
  out.divisible.assign(m_list.size(), 0);
  const std::uint64_t orbit = (p - 1) / 2;
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t == table.singular_t()) continue;
    for (bool twisted : {false, true}) {
      const ClassData& d = table.data(table.generic_index(t, twisted));
      out.valid_pairs += orbit;
      if (d.cyclic) out.cyclic += orbit;
      for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (d.order % m_list[i] == 0) out.divisible[i] += orbit;
      }
    }
  }
  return out;
}

ClassCounts class_counts_naive(std::uint64_t p, const std::vector<std::uint64_t>& m_list) {
  validate_m_list(m_list);
  if (p <= 3 || !numth::is_prime(p)) {
    throw DomainError("class_counts: p must be a prime > 3, got " + std::to_string(p));
  }
  const auto chi = curve::residue_table(p);
  ClassCounts out;
  out.p = p;
  out.m_list = m_list;
  out.divisible.assign(m_list.size(), 0);
  for (std::uint64_t a = 1; a < p; ++a) {
    for (std::uint64_t b = 1; b < p; ++b) {
      if (curve::CurveModP::discriminant(p, a, b) == 0) continue;
      const curve::CurveModP c(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
      const std::uint64_t order = curve::point_count(c, *chi);
      ++out.valid_pairs;
      if (curve::is_cyclic(c, order)) ++out.cyclic;
      for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (order % m_list[i] == 0) ++out.divisible[i];
      }
    }
  }
  return out;
}

std::uint64_t box_weight(std::uint64_t H, std::uint64_t alpha, std::uint64_t p) {
  if (p <= 3) throw DomainError("box_weight: p must exceed 3");
  const std::int64_t h = static_cast<std::int64_t>(H), a = static_cast<std::int64_t>(alpha % p),
                     q = static_cast<std::int64_t>(p);
  const std::int64_t hi = floor_div(h - a, q);
  const std::int64_t lo = -floor_div(h + a, q);  // ceil((-h - a)/q)
  return hi >= lo ? static_cast<std::uint64_t>(hi - lo + 1) : 0;
}

}  // namespace ecavg::survey
