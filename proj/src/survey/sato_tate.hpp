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
#include <vector>

#include "survey/survey.hpp"

namespace ecavg::survey {

// Sato-Tate mass of [alpha, beta] under (2/pi) sin^2(t) dt, in closed form.
double st_mass(double alpha, double beta);

// Masses of `bins` equal-width bins partitioning [0, pi].
std::vector<double> st_bin_masses(unsigned bins);

unsigned angle_bin(double theta, unsigned bins);

// Half the L1 distance between the normalized histogram and the masses.
double total_variation(const std::vector<std::uint64_t>& histogram, const std::vector<double>& masses);

struct SatoTateClass {
  numth::CongruenceClass cc;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> histogram;
  std::vector<double> masses;
  double total_variation = 0;
};

struct SatoTateReport {
  SurveyConfig config;
  std::vector<SatoTateClass> classes;
  double max_total_variation = 0;
};

// Frobenius angle histograms per unit class mod n, from family_survey.
SatoTateReport sato_tate_survey(const SurveyConfig& config);

}  // namespace ecavg::survey
