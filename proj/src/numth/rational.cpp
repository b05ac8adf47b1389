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

#include "numth/rational.hpp"

#include <vector>

#include "numth/integer.hpp"

namespace ecavg::numth {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("ExactRational: zero denominator");
  q_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw DomainError("ExactRational: cannot parse '" + std::string(text) + "'");
  }
  return ExactRational(to_mpz(num), to_mpz(den));
}

std::string ExactRational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw DomainError("ExactRational: division by zero");
  q_ /= o.q_;
  return *this;
}

ExactRational sum(std::span<const ExactRational> terms) {
  if (terms.empty()) return ExactRational(0);
  std::vector<mpq_class> level;
  level.reserve(terms.size());
  for (const auto& t : terms) level.push_back(t.raw());
  while (level.size() > 1) {
    std::vector<mpq_class> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return ExactRational(level.front());
}

}  // namespace ecavg::numth
