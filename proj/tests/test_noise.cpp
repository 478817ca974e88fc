// Copyright 2026 The rbwalk Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "rbwalk/analytics.hpp"
#include "rbwalk/errors.hpp"
#include "rbwalk/noise.hpp"
#include "rbwalk/stats.hpp"

namespace rbwalk {
namespace {

std::vector<NoiseRealization> draw(const NoiseModel& m, int J, int count, std::uint64_t seed) {
  NoiseSampler sampler(m, J);
  std::vector<NoiseRealization> out;
  for (int r = 0; r < count; ++r) {
    Stream s(derive_seed(seed, {std::uint64_t(r)}));
    out.push_back(sampler.sample(s));
  }
  return out;
}

TEST(Noise, DcRepeatsOneAngle) {
  Stream s(1);
  const auto r = sample_realization(noise::Dc{0.015}, 4, s);
  ASSERT_EQ(r.length(), 4);
  for (double v : r.values) EXPECT_EQ(v, r.values[0]);
  EXPECT_NE(r.values[0], 0.0);
}

TEST(Noise, BlockHoldsAnglesOverBlocks) {
  Stream s(2);
  const auto r = sample_realization(noise::Block{0.1, 2}, 4, s);
  EXPECT_EQ(r.values[0], r.values[1]);
  EXPECT_EQ(r.values[2], r.values[3]);
  EXPECT_NE(r.values[0], r.values[2]);
}

TEST(Noise, BlockTruncatesFinalBlock) {
  Stream s(3);
  const auto r = sample_realization(noise::Block{0.1, 2}, 5, s);
  EXPECT_EQ(r.values[0], r.values[1]);
  EXPECT_EQ(r.values[2], r.values[3]);
  EXPECT_NE(r.values[3], r.values[4]);
}

TEST(Noise, SilentModelsGiveZeros) {
  Stream s(4);
  for (const NoiseModel& m : {NoiseModel{noise::Markovian{0.0}}, NoiseModel{noise::Dc{0.0}},
                              NoiseModel{noise::Block{0.0, 3}},
                              NoiseModel{noise::FourierPsd{{1.0, 0.5}, 1.0, 0.0, 1.0}}}) {
    EXPECT_TRUE(is_silent(m));
    for (double v : sample_realization(m, 7, s).values) EXPECT_EQ(v, 0.0);
  }
}

TEST(Noise, SingleModeFourierIsAPhaseRandomizedCosine) {
  const noise::FourierPsd psd{{1.0}, 0.3, 0.02, 1.0};
  Stream a(9), b(9);
  const auto r = sample_realization(psd, 20, a);
  const double psi = 2.0 * std::numbers::pi * b.uniform();
  for (int j = 1; j <= 20; ++j)
    EXPECT_NEAR(r.values[j - 1], 0.02 * 0.3 * std::cos(0.3 * j + psi), 1e-15);
}

TEST(Noise, ValidationRejectsBadParameters) {
  EXPECT_THROW(validate(noise::Markovian{-1.0}), InvalidArgument);
  EXPECT_THROW(validate(noise::Block{0.1, 0}), InvalidArgument);
  EXPECT_THROW(validate(noise::FourierPsd{{}, 1.0, 1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(validate(noise::FourierPsd{{1.0}, -1.0, 1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(NoiseSampler(noise::Dc{0.1}, 0), InvalidArgument);
  EXPECT_NO_THROW(validate(noise::Dc{0.0}));
}

TEST(Autocorrelation, AnalyticForms) {
  const auto mk = analytic_autocorrelation(noise::Markovian{0.015}, 5);
  EXPECT_DOUBLE_EQ(mk.values[0], 2.25e-4);
  for (int k = 1; k < 5; ++k) EXPECT_EQ(mk.values[k], 0.0);

  const auto dc = analytic_autocorrelation(noise::Dc{0.015}, 5);
  for (double v : dc.values) EXPECT_DOUBLE_EQ(v, 2.25e-4);

  const auto blk = analytic_autocorrelation(noise::Block{0.1, 4}, 8);
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(blk.values[k], 0.01 * std::max(0.0, (4.0 - k) / 4.0), 1e-17);

  const noise::FourierPsd psd{{1.0}, 0.3, 0.02, 1.0};
  const auto f = analytic_autocorrelation(psd, 6);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(f.values[k], 0.5 * std::pow(0.02 * 0.3, 2) * std::cos(0.3 * k), 1e-12 * 1.8e-5);
}

TEST(Autocorrelation, ConstantRealizationsGiveSquare) {
  const std::vector<NoiseRealization> rs{{{0.5, 0.5, 0.5}}, {{0.5, 0.5, 0.5}}};
  const auto c = empirical_autocorrelation(rs);
  for (double v : c.values) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(Autocorrelation, RejectsMismatchedInput) {
  EXPECT_THROW(empirical_autocorrelation({{{0.1, 0.2}}}), InvalidArgument);
  EXPECT_THROW(empirical_autocorrelation({{{0.1, 0.2}}, {{0.1}}}), InvalidArgument);
}

class EmpiricalMatchesAnalytic : public ::testing::TestWithParam<int> {};

TEST_P(EmpiricalMatchesAnalytic, WithinFourStandardErrors) {
  const std::vector<NoiseModel> models{
      noise::Markovian{0.015}, noise::Dc{0.015}, noise::Block{0.015, 5},
      noise::FourierPsd::power_law(-1.0, 8, 2.0 * std::numbers::pi / 50.0, 0.1, 1.0)};
  const NoiseModel& m = models[static_cast<std::size_t>(GetParam())];
  const int J = 40;
  const auto emp = empirical_autocorrelation(draw(m, J, 10000, 77 + GetParam()));
  auto ana = analytic_autocorrelation(m, J);
  if (const auto* b = std::get_if<noise::Block>(&m)) {
    // The sampler aligns blocks at j = 1, so averaging over time origins sees
    // the exact overlap fraction of that grid rather than the grid-phase
    // average (M - k) / M.
    for (int k = 0; k < J; ++k) {
      int same = 0;
      for (int t = 0; t + k < J; ++t) same += (t / b->length == (t + k) / b->length);
      ana.values[k] = b->sigma * b->sigma * same / double(J - k);
    }
  }
  for (int k = 0; k <= 20; ++k) {
    const double se = std::max(emp.standard_errors[k], 1e-300);
    EXPECT_LE(std::abs(emp.values[k] - ana.values[k]), 4.0 * se) << model_name(m) << " lag " << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Models, EmpiricalMatchesAnalytic, ::testing::Values(0, 1, 2, 3));

TEST(Autocorrelation, FourierNoiseIsStationary) {
  const auto psd = noise::FourierPsd::power_law(-1.0, 6, 2.0 * std::numbers::pi / 30.0, 0.1, 1.0);
  const auto rs = draw(psd, 40, 20000, 5);
  for (int k : {0, 3, 7}) {
    std::vector<double> early, late;
    for (const auto& r : rs) {
      early.push_back(r.values[0] * r.values[k]);
      late.push_back(r.values[20] * r.values[20 + k]);
    }
    const auto a = sample_moments(early), b = sample_moments(late);
    EXPECT_LE(std::abs(a.mean - b.mean), 4.0 * std::hypot(a.standard_error, b.standard_error)) << k;
  }
}

TEST(Noise, BlockOfLengthOneMatchesMarkovianDistribution) {
  std::vector<double> a, b;
  for (const auto& r : draw(noise::Block{0.02, 1}, 10, 3000, 1)) a.insert(a.end(), r.values.begin(), r.values.end());
  for (const auto& r : draw(noise::Markovian{0.02}, 10, 3000, 2)) b.insert(b.end(), r.values.begin(), r.values.end());
  EXPECT_GT(ks_two_sample(a, b).p_value, 1e-3);
  const auto c = analytic_autocorrelation(noise::Block{0.02, 1}, 10);
  const auto d = analytic_autocorrelation(noise::Markovian{0.02}, 10);
  for (int k = 0; k < 10; ++k) EXPECT_DOUBLE_EQ(c.values[k], d.values[k]);
}

TEST(Autocorrelation, BlockFormIsTheGridPhaseAverage) {
  const int J = 12, M = 4;
  const auto c = analytic_autocorrelation(noise::Block{1.0, M}, J);
  for (int k = 0; k < J; ++k) {
    double overlap = 0.0;
    for (int phase = 0; phase < M; ++phase) overlap += (phase + k < M);
    EXPECT_NEAR(c.values[k], overlap / M, 1e-15) << k;
  }
}

TEST(Noise, FullLengthBlockIsDc) {
  Stream s(8);
  const auto r = sample_realization(noise::Block{0.02, 12}, 12, s);
  for (double v : r.values) EXPECT_EQ(v, r.values[0]);
}

TEST(Noise, PowerLawWeights) {
  EXPECT_DOUBLE_EQ(power_law_weight(0.0, 4), 0.25);
  EXPECT_DOUBLE_EQ(power_law_weight(2.0, 7), 1.0);
  EXPECT_DOUBLE_EQ(power_law_weight(-1.0, 4), 0.125);
  const auto w = power_law_weights(-2.0, 3);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w[2], 1.0 / 9.0);
}

TEST(Noise, CalibrationHitsTargetVariance) {
  const auto psd = calibrate_amplitude(noise::FourierPsd::power_law(-1.0, 20, 0.01, 1.0, 1.0), 4.5e-7);
  EXPECT_NEAR(analytic_autocorrelation(psd, 1).values[0], 4.5e-7, 1e-20);
}

TEST(Noise, CombSpectrumReproducesAutocorrelation) {
  const auto psd = noise::FourierPsd::power_law(1.0, 5, 0.2, 0.05, 1.5);
  const auto ana = analytic_autocorrelation(psd, 15);
  const auto rec = psd_to_autocorrelation(comb_spectrum(psd), psd.gate_time, 15);
  for (int k = 0; k < 15; ++k) EXPECT_NEAR(rec.values[k], ana.values[k], 1e-18);
}

TEST(Noise, BandLimitedPsdPeaksAtModeFrequencies) {
  const noise::FourierPsd psd{{1.0, 1.0}, 1.0, 0.1, 1.0};
  const double at_line = band_limited_psd(psd, 2.0, 50.0);
  EXPECT_GT(at_line, band_limited_psd(psd, 1.5, 50.0));
  EXPECT_GT(at_line, band_limited_psd(psd, 2.5, 50.0));
  EXPECT_NEAR(band_limited_psd(psd, 2.0, 50.0), band_limited_psd(psd, -2.0, 50.0), 1e-15);
}

TEST(Noise, RealizationCsvRoundTrip) {
  const auto rs = draw(noise::Markovian{0.013}, 6, 4, 3);
  std::stringstream ss;
  write_realizations_csv(ss, rs);
  const auto back = read_realizations_csv(ss);
  ASSERT_EQ(back.size(), rs.size());
  for (std::size_t r = 0; r < rs.size(); ++r) EXPECT_EQ(back[r].values, rs[r].values);
}

}  // namespace
}  // namespace rbwalk
