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

#include "survey/survey.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "curve/bsgs.hpp"
#include "curve/curve.hpp"
#include "densities/densities.hpp"
#include "numth/integer.hpp"
#include "numth/parallel.hpp"
#include "numth/random.hpp"
#include "numth/sieve.hpp"
#include "survey/class_table.hpp"
#include "survey/sato_tate.hpp"

namespace ecavg::survey {

namespace {

struct Tally {
  std::uint64_t pairs = 0, cyclic = 0;
  std::vector<std::uint64_t> divisible;
  std::vector<std::uint64_t> histogram;
  bool random = false;

  Tally(std::size_t m, unsigned bins) : divisible(m, 0), histogram(bins, 0) {}

  void add(const ClassData& d, std::uint64_t weight, std::uint64_t p, const std::vector<std::uint64_t>& m_list,
           unsigned bins) {
    pairs += weight;
    if (d.cyclic) cyclic += weight;
    for (std::size_t i = 0; i < m_list.size(); ++i) {
      if (d.order % m_list[i] == 0) divisible[i] += weight;
    }
    histogram[angle_bin(curve::frobenius_angle(p, d.order), bins)] += weight;
    random = random || d.probabilistic;
  }

  void merge(const Tally& o) {
    pairs += o.pairs;
    cyclic += o.cyclic;
    for (std::size_t i = 0; i < divisible.size(); ++i) divisible[i] += o.divisible[i];
    for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += o.histogram[i];
    random = random || o.random;
  }
};

// Residues of [-H, H] mod p with nonzero weight.
std::vector<std::pair<std::uint64_t, std::uint64_t>> weighted_residues(std::uint64_t H, std::uint64_t p) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (2 * H + 1 >= p) {
    for (std::uint64_t r = 0; r < p; ++r) out.emplace_back(r, box_weight(H, r, p));
  } else {
    const std::int64_t h = static_cast<std::int64_t>(H);
    for (std::int64_t a = -h; a <= h; ++a) out.emplace_back(numth::reduce(a, p), 1);
  }
  return out;
}

Tally exact_prime(const SurveyConfig& cfg, std::uint64_t p) {
  PrimeClassTable table(p);
  const auto ra = weighted_residues(cfg.A, p), rb = weighted_residues(cfg.B, p);
  std::vector<std::uint64_t> weight(table.size(), 0);
  for (const auto& [alpha, wa] : ra) {
    for (const auto& [beta, wb] : rb) {
      const std::size_t idx = table.classify(alpha, beta);
      if (idx != PrimeClassTable::npos) weight[idx] += wa * wb;
    }
  }
  std::vector<char> wanted(table.size());
  for (std::size_t i = 0; i < weight.size(); ++i) wanted[i] = weight[i] != 0;
  table.evaluate(wanted);
  Tally t(cfg.m_list.size(), cfg.angle_bins);
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (weight[i] != 0) t.add(table.data(i), weight[i], p, cfg.m_list, cfg.angle_bins);
  }
  return t;
}

// Per-curve hit counts for one congruence class in sampled mode; row i holds
// [pairs, cyclic, divisible...] for curve i.
struct SampleGrid {
  std::size_t width;
  std::vector<std::uint32_t> cells;
  Tally totals;

  SampleGrid(std::size_t samples, std::size_t m, unsigned bins)
      : width(2 + m), cells(samples * (2 + m), 0), totals(m, bins) {}
};

void sampled_prime(const SurveyConfig& cfg, std::uint64_t p, const std::vector<std::int64_t>& as,
                   const std::vector<std::int64_t>& bs, SampleGrid& grid) {
  const std::size_t S = as.size();
  auto record = [&](std::size_t i, const ClassData& d) {
    std::uint32_t* row = &grid.cells[i * grid.width];
    row[0] += 1;
    if (d.cyclic) row[1] += 1;
    for (std::size_t j = 0; j < cfg.m_list.size(); ++j) {
      if (d.order % cfg.m_list[j] == 0) row[2 + j] += 1;
    }
    grid.totals.add(d, 1, p, cfg.m_list, cfg.angle_bins);
  };
  if (cfg.use_bsgs) {
    for (std::size_t i = 0; i < S; ++i) {
      const std::uint64_t a = numth::reduce(as[i], p), b = numth::reduce(bs[i], p);
      if (curve::CurveModP::discriminant(p, a, b) == 0) continue;
      const curve::CurveModP c(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
      numth::Rng rng = numth::stream_for(cfg.seed ^ numth::mix64(p), i);
      ClassData d{a, b, curve::fast_point_count(c, rng), false, false};
      d.cyclic = curve::is_cyclic(c, d.order, &d.probabilistic);
      record(i, d);
    }
    return;
  }
  PrimeClassTable table(p);
  std::vector<std::size_t> idx(S);
  std::vector<char> wanted(table.size(), 0);
  for (std::size_t i = 0; i < S; ++i) {
    idx[i] = table.classify(numth::reduce(as[i], p), numth::reduce(bs[i], p));
    if (idx[i] != PrimeClassTable::npos) wanted[idx[i]] = 1;
  }
  table.evaluate(wanted);
  for (std::size_t i = 0; i < S; ++i) {
    if (idx[i] != PrimeClassTable::npos) record(i, table.data(idx[i]));
  }
}

double standard_error(const SampleGrid& g, std::size_t column, double scale) {
  const std::size_t S = g.cells.size() / g.width;
  long double sum = 0, sq = 0;
  for (std::size_t i = 0; i < S; ++i) {
    const long double v = g.cells[i * g.width + column];
    sum += v;
    sq += v * v;
  }
  const long double var = (sq - sum * sum / S) / (S - 1);
  return scale * std::sqrt(static_cast<double>(std::max(var, 0.0L)) / static_cast<double>(S));
}

void fill_predictions(const SurveyConfig& cfg, const std::vector<std::uint32_t>& primes, ClassStats& s) {
  const double box = 4.0 * static_cast<double>(cfg.A) * static_cast<double>(cfg.B);
  // Per-term exact values; the double accumulation is far below the
  // resolution of any comparison made with these predictions.
  double theta = 0;
  std::vector<double> omega(cfg.m_list.size(), 0);
  std::vector<std::uint64_t> mbar(cfg.m_list.size());
  for (std::size_t j = 0; j < cfg.m_list.size(); ++j) mbar[j] = densities::underline_m(cfg.m_list[j]).value();
  for (std::uint32_t p : primes) {
    theta += densities::vartheta(p).to_double();
    for (std::size_t j = 0; j < cfg.m_list.size(); ++j) {
      if (std::gcd<std::uint64_t>(p, mbar[j]) != 1) continue;
      omega[j] += densities::omega_r(p, cfg.m_list[j]).to_double();
    }
  }
  s.predicted_cyclic = box * theta;
  s.cyclic_ratio = s.predicted_cyclic > 0 ? s.cyclic_estimate / s.predicted_cyclic : 0;
  s.predicted_divisible.resize(cfg.m_list.size());
  s.divisible_ratio.resize(cfg.m_list.size());
  for (std::size_t j = 0; j < cfg.m_list.size(); ++j) {
    s.predicted_divisible[j] = box * omega[j];
    s.divisible_ratio[j] = s.predicted_divisible[j] > 0 ? s.divisible_estimate[j] / s.predicted_divisible[j] : 0;
  }
}

}  // namespace

std::string mode_name(Mode m) { return m == Mode::kExact ? "exact" : "sampled"; }

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::kExact;
  if (s == "sampled") return Mode::kSampled;
  throw DomainError("mode must be 'exact' or 'sampled', got '" + s + "'");
}

void SurveyConfig::validate() const {
  if (!(x >= 5)) throw DomainError("survey: x must be at least 5");
  if (x > static_cast<double>(numth::kSieveLimit)) throw DomainError("survey: x exceeds the sieve limit");
  if (A < 1 || B < 1 || A > 1000000000 || B > 1000000000) {
    throw DomainError("survey: A and B must lie in [1, 10^9]");
  }
  if (n < 1 || n > 1000000) throw DomainError("survey: n must lie in [1, 10^6]");
  for (std::uint64_t m : m_list) {
    if (m == 0) throw DomainError("survey: m must be positive");
  }
  if (angle_bins < 1 || angle_bins > 100000) throw DomainError("survey: angle bins must lie in [1, 10^5]");
  if (mode == Mode::kSampled && sample_count < kMinSamples) {
    throw DomainError("survey: sampled mode needs at least 100 samples");
  }
  if (mode == Mode::kSampled && sample_count > 100000000) {
    throw DomainError("survey: at most 10^8 samples");
  }
}

double SurveyConfig::effective_epsilon() const {
  const double lx = std::log(x), la = std::log(static_cast<double>(A)) / lx,
               lb = std::log(static_cast<double>(B)) / lx;
  return std::min({la, lb, 1 - la, 1 - lb, la + lb - 1});
}

SurveyReport family_survey(const SurveyConfig& config) {
  config.validate();
  SurveyReport report;
  report.config = config;
  report.effective_epsilon = config.effective_epsilon();
  const auto classes = numth::unit_classes(config.n);
  const auto all_primes = numth::primes_up_to(numth::bound_floor(config.x));
  const std::size_t M = config.m_list.size();

  std::vector<std::vector<std::uint32_t>> by_class(classes.size());
  for (std::uint32_t p : all_primes) {
    if (p <= 3 || std::gcd<std::uint64_t>(p, config.n) != 1) continue;
    const std::uint64_t k = p % config.n == 0 ? config.n : p % config.n;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].k() == k) by_class[c].push_back(p);
    }
  }

  std::vector<std::int64_t> as, bs;
  if (config.mode == Mode::kSampled) {
    as.resize(config.sample_count);
    bs.resize(config.sample_count);
    for (std::uint64_t i = 0; i < config.sample_count; ++i) {
      numth::Rng rng = numth::stream_for(config.seed, i);
      as[i] = numth::uniform_int(rng, -static_cast<std::int64_t>(config.A), static_cast<std::int64_t>(config.A));
      bs[i] = numth::uniform_int(rng, -static_cast<std::int64_t>(config.B), static_cast<std::int64_t>(config.B));
    }
  }
  const double box = 4.0 * static_cast<double>(config.A) * static_cast<double>(config.B);
  const std::vector<double> masses = st_bin_masses(config.angle_bins);

  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& primes = by_class[c];
    ClassStats s;
    s.cc = classes[c];
    s.primes = primes.size();
    Tally total(M, config.angle_bins);
    std::vector<double> se(M + 2, 0);

    if (config.mode == Mode::kExact) {
      std::vector<Tally> per_prime(primes.size(), Tally(M, config.angle_bins));
      numth::parallel_for(primes.size(), config.threads,
                          [&](std::size_t i) { per_prime[i] = exact_prime(config, primes[i]); });
      for (const Tally& t : per_prime) total.merge(t);
      s.pairs_estimate = static_cast<double>(total.pairs);
      s.cyclic_estimate = static_cast<double>(total.cyclic);
      for (std::size_t j = 0; j < M; ++j) s.divisible_estimate.push_back(static_cast<double>(total.divisible[j]));
    } else {
      const unsigned workers = static_cast<unsigned>(
          std::min<std::size_t>(numth::resolve_threads(config.threads), std::max<std::size_t>(primes.size(), 1)));
      std::vector<SampleGrid> grids(workers, SampleGrid(config.sample_count, M, config.angle_bins));
      numth::parallel_for(workers, workers, [&](std::size_t w) {
        for (std::size_t i = w; i < primes.size(); i += workers) sampled_prime(config, primes[i], as, bs, grids[w]);
      });
      SampleGrid merged(config.sample_count, M, config.angle_bins);
      for (const SampleGrid& g : grids) {
        for (std::size_t i = 0; i < merged.cells.size(); ++i) merged.cells[i] += g.cells[i];
        merged.totals.merge(g.totals);
      }
      total = merged.totals;
      const double scale = box / static_cast<double>(config.sample_count);
      s.pairs_estimate = scale * static_cast<double>(total.pairs);
      s.cyclic_estimate = scale * static_cast<double>(total.cyclic);
      for (std::size_t j = 0; j < M; ++j) {
        s.divisible_estimate.push_back(scale * static_cast<double>(total.divisible[j]));
      }
      for (std::size_t col = 0; col < M + 2; ++col) se[col] = standard_error(merged, col, box);
    }

    s.pairs = total.pairs;
    s.cyclic = total.cyclic;
    s.divisible = total.divisible;
    s.cyclic_se = se[1];
    s.divisible_se.assign(se.begin() + 2, se.end());
    s.angle_histogram = total.histogram;
    s.st_masses = masses;
    s.total_variation = total_variation(total.histogram, masses);
    report.probabilistic = report.probabilistic || total.random;
    fill_predictions(config, primes, s);
    report.classes.push_back(std::move(s));
  }
  return report;
}

}  // namespace ecavg::survey
