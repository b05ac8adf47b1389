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

#include "survey/sato_tate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "numth/integer.hpp"

namespace ecavg::survey {

double st_mass(double alpha, double beta) {
  return ((beta - alpha) - (std::sin(2 * beta) - std::sin(2 * alpha)) / 2) / std::numbers::pi;
}

std::vector<double> st_bin_masses(unsigned bins) {
  if (bins == 0) throw DomainError("angle bins must be positive");
  std::vector<double> out(bins);
  const double width = std::numbers::pi / bins;
  for (unsigned i = 0; i < bins; ++i) out[i] = st_mass(i * width, (i + 1) * width);
  return out;
}

unsigned angle_bin(double theta, unsigned bins) {
  const double scaled = theta / std::numbers::pi * bins;
  return static_cast<unsigned>(std::clamp(scaled, 0.0, static_cast<double>(bins - 1)));
}

double total_variation(const std::vector<std::uint64_t>& histogram, const std::vector<double>& masses) {
  std::uint64_t total = 0;
  for (std::uint64_t h : histogram) total += h;
  if (total == 0) return 0;
  double tv = 0;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    tv += std::fabs(static_cast<double>(histogram[i]) / static_cast<double>(total) - masses[i]);
  }
  return tv / 2;
}

SatoTateReport sato_tate_survey(const SurveyConfig& config) {
  SurveyConfig stripped = config;
  stripped.m_list.clear();
  const SurveyReport full = family_survey(stripped);
  SatoTateReport out;
  out.config = config;
  for (const ClassStats& s : full.classes) {
    SatoTateClass c;
    c.cc = s.cc;
    c.histogram = s.angle_histogram;
    for (std::uint64_t h : c.histogram) c.samples += h;
    c.masses = s.st_masses;
    c.total_variation = s.total_variation;
    out.max_total_variation = std::max(out.max_total_variation, c.total_variation);
    out.classes.push_back(std::move(c));
  }
  return out;
}

}  // namespace ecavg::survey
