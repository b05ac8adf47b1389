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

#include "curve/long_model.hpp"

#include <cctype>

#include "curve/bsgs.hpp"
#include "numth/integer.hpp"
#include "numth/random.hpp"
#include "numth/sieve.hpp"

namespace ecavg::curve {

namespace {

std::uint64_t mod_p(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

LongModel::LongModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  const mpz_class b2 = a_[0] * a_[0] + 4 * a_[1];
  const mpz_class b4 = 2 * a_[3] + a_[0] * a_[2];
  const mpz_class b6 = a_[2] * a_[2] + 4 * a_[4];
  c4_ = b2 * b2 - 24 * b4;
  c6_ = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
}

LongModel LongModel::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) continue;
    cleaned += ch;
  }
  std::vector<mpz_class> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = cleaned.find(',', start);
    std::string token = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty() && token[0] == '+') token.erase(0, 1);
    mpz_class v;
    if (token.empty() || v.set_str(token, 10) != 0) {
      throw DomainError("LongModel: malformed coefficient list '" + std::string(text) + "'");
    }
    parts.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 5) {
    throw DomainError("LongModel: expected 5 coefficients a1,a2,a3,a4,a6, got " +
                      std::to_string(parts.size()));
  }
  return LongModel(parts[0], parts[1], parts[2], parts[3], parts[4]);
}

std::string LongModel::str() const {
  std::string s = "[";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ',';
    s += a_[i].get_str();
  }
  return s + "]";
}

std::uint64_t LongModel::naive_point_count(std::uint64_t p) const {
  const std::uint64_t a1 = mod_p(a_[0], p), a2 = mod_p(a_[1], p), a3 = mod_p(a_[2], p),
                      a4 = mod_p(a_[3], p), a6 = mod_p(a_[4], p);
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t right = (((x + a2) % p * x % p + a4) % p * x % p + a6) % p;
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::uint64_t left = (y * y % p + a1 * x % p * y % p + a3 * y % p) % p;
      if (left == right) ++count;
    }
  }
  return count;
}

std::optional<CurveModP> reduce_to_short(const LongModel& model, std::uint64_t p) {
  if (p <= 3) throw DomainError("reduce_to_short: p must exceed 3, got " + std::to_string(p));
  const bool short_form = model.a1() == 0 && model.a2() == 0 && model.a3() == 0;
  const std::uint64_t ua = short_form ? mod_p(model.a4(), p) : mod_p(-27 * model.c4(), p);
  const std::uint64_t ub = short_form ? mod_p(model.a6(), p) : mod_p(-54 * model.c6(), p);
  if (CurveModP::discriminant(p, ua, ub) == 0) return std::nullopt;
  return CurveModP(p, static_cast<std::int64_t>(ua), static_cast<std::int64_t>(ub));
}

CensusResult individual_census(const LongModel& model, double x, const numth::CongruenceClass& cc,
                               const std::vector<std::uint64_t>& m_list) {
  if (!(x >= 5)) throw DomainError("individual_census: x must be at least 5");
  for (std::uint64_t m : m_list) {
    if (m == 0) throw DomainError("individual_census: m must be positive");
  }
  CensusResult out;
  out.cc = cc;
  out.m_list = m_list;
  out.divisible.assign(m_list.size(), 0);
  for (std::uint32_t p : numth::primes_in_class(x, cc)) {
    if (p <= 3) continue;
    const auto curve = reduce_to_short(model, p);
    if (!curve) {
      out.bad_primes.push_back(p);
      continue;
    }
    out.good_primes.push_back(p);
    // BSGS past the scan bound; the count is exact either way.
    std::uint64_t N;
    if (p <= kDeterministicBound) {
      N = point_count(*curve);
    } else {
      numth::Rng rng = numth::stream_for(0, p);
      N = fast_point_count(*curve, rng);
    }
    bool random = false;
    if (is_cyclic(*curve, N, &random)) ++out.cyclic;
    out.probabilistic = out.probabilistic || random;
    for (std::size_t i = 0; i < m_list.size(); ++i) {
      if (N % m_list[i] == 0) ++out.divisible[i];
    }
  }
  return out;
}

}  // namespace ecavg::curve
