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

// The family statistic: for each unit class k mod n, the number of pairs
// (a, b) in the box |a| <= A, |b| <= B and good primes 3 < p <= x, p = k (n),
// at which the reduction is cyclic or has order divisible by m.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numth/congruence.hpp"

namespace ecavg::survey {

enum class Mode { kExact, kSampled };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

inline constexpr std::uint64_t kMinSamples = 100;

struct SurveyConfig {
  double x = 1000;
  std::uint64_t A = 10, B = 10;
  std::uint64_t n = 1;
  std::vector<std::uint64_t> m_list;
  Mode mode = Mode::kExact;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 0;
  unsigned angle_bins = 16;
  unsigned threads = 0;    // 0: hardware concurrency
  bool use_bsgs = false;   // sampled mode only

  void validate() const;
  // min of log A, log B, log x - log A, log x - log B and log AB - log x,
  // all over log x. When positive, x^eps <= A, B <= x^(1-eps) and
  // AB >= x^(1+eps) hold with this eps.
  double effective_epsilon() const;
};

struct ClassStats {
  numth::CongruenceClass cc;
  std::uint64_t primes = 0;  // good primes 3 < p <= x in the class

  // Exact mode: literal counts. Sampled mode: raw hits over the samples.
  std::uint64_t pairs = 0;
  std::uint64_t cyclic = 0;
  std::vector<std::uint64_t> divisible;  // parallel to m_list

  // Exact mode copies the counts; sampled mode scales by 4AB / samples.
  double pairs_estimate = 0;
  double cyclic_estimate = 0;
  std::vector<double> divisible_estimate;
  double cyclic_se = 0;                 // zero in exact mode
  std::vector<double> divisible_se;

  double predicted_cyclic = 0;          // 4AB * sum of vartheta_p
  std::vector<double> predicted_divisible;  // 4AB * sum of omega_p(m)
  double cyclic_ratio = 0;
  std::vector<double> divisible_ratio;

  std::vector<std::uint64_t> angle_histogram;  // weighted like the counts
  std::vector<double> st_masses;
  double total_variation = 0;
};

struct SurveyReport {
  SurveyConfig config;
  double effective_epsilon = 0;
  bool probabilistic = false;  // some Sylow test was randomized
  std::vector<ClassStats> classes;
};

SurveyReport family_survey(const SurveyConfig& config);

}  // namespace ecavg::survey
