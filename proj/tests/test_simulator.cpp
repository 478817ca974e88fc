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
#include <sstream>

#include "rbwalk/errors.hpp"
#include "rbwalk/simulator.hpp"

namespace rbwalk {
namespace {

TEST(TraceFidelity, ClosedForms) {
  EXPECT_EQ(trace_fidelity(Mat2::identity()), 1.0);
  EXPECT_NEAR(trace_fidelity(z_rotation(0.1)), 0.9900333, 1e-7);
  EXPECT_NEAR(trace_fidelity(z_rotation(0.1)), std::pow(std::cos(0.1), 2), 1e-15);
  EXPECT_NEAR(trace_fidelity(Complex{0.0, 1.0} * pauli(Axis::Z)), 0.0, 1e-15);
  EXPECT_THROW(trace_fidelity(Complex{2.0, 0.0} * Mat2::identity()), NumericalError);
  EXPECT_THROW(trace_fidelity(Complex{std::nan(""), 0.0} * Mat2::identity()), NumericalError);
}

TEST(NoisyUnitary, SingleGateIsAZRotation) {
  const auto seq = SequenceSpec::from_indices({5, 8});
  const Mat2 u = noisy_sequence_unitary(seq, NoiseRealization{{0.1, 0.0}});
  EXPECT_NEAR(trace_fidelity(u), std::pow(std::cos(0.1), 2), 1e-15);
}

TEST(NoisyUnitary, ZeroNoiseIsExactlyIdentityUpToPhase) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Stream s(seed);
    const auto seq = sample_sequence(200, s);
    EXPECT_EQ(trace_fidelity(noisy_sequence_unitary(seq, NoiseRealization{std::vector<double>(200, 0.0)})), 1.0);
  }
}

TEST(NoisyUnitary, StaysUnitaryOverLongSequences) {
  Stream s(3);
  const int J = 10000;
  const auto seq = sample_sequence(J, s);
  const auto noise = sample_realization(noise::Markovian{0.05}, J, s);
  EXPECT_LE(unitarity_defect(noisy_sequence_unitary(seq, noise)), 1e-10);
}

TEST(NoisyUnitary, UniversalZOnlyIsBitIdenticalToDephasing) {
  Stream s(4);
  const auto seq = sample_sequence(60, s);
  UniversalRealization u;
  u.axes[0].values.assign(60, 0.0);
  u.axes[1].values.assign(60, 0.0);
  u.axes[2] = sample_realization(noise::Markovian{0.02}, 60, s);
  const Mat2 a = noisy_sequence_unitary(seq, u), b = noisy_sequence_unitary(seq, u.axes[2]);
  EXPECT_EQ(max_abs_diff(a, b), 0.0);
}

TEST(Experiment, ZeroNoiseGivesUnitFidelity) {
  const auto f = run_experiment(ExperimentConfig::dephasing(100, 50, 5, noise::Dc{0.0}, 1));
  for (double v : f.values) EXPECT_EQ(v, 1.0);
}

TEST(Experiment, ConfigValidation) {
  EXPECT_THROW(ExperimentConfig::dephasing(1, 1, 1, noise::Dc{0.1}, 1).validate(), InvalidArgument);
  EXPECT_THROW(ExperimentConfig::dephasing(10, 0, 1, noise::Dc{0.1}, 1).validate(), InvalidArgument);
  EXPECT_THROW(ExperimentConfig::dephasing(10, 1, 0, noise::Dc{0.1}, 1).validate(), InvalidArgument);
  EXPECT_THROW(ExperimentConfig::dephasing(10, 1, 1, noise::Dc{-0.1}, 1).validate(), InvalidArgument);
  EXPECT_NO_THROW(ExperimentConfig::dephasing(10, 1, 1, noise::Dc{0.1}, 1).validate());
}

TEST(Experiment, DeterministicAndThreadCountIndependent) {
  const auto cfg = ExperimentConfig::dephasing(80, 37, 9, noise::Markovian{0.015}, 123);
  const auto a = run_experiment(cfg, 1);
  const auto b = run_experiment(cfg, 4);
  const auto c = run_experiment(cfg, 3);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values, c.values);
}

TEST(Experiment, CellsDoNotDependOnGridSize) {
  const auto small = run_experiment(ExperimentConfig::dephasing(40, 5, 3, noise::Dc{0.02}, 9));
  const auto big = run_experiment(ExperimentConfig::dephasing(40, 10, 6, noise::Dc{0.02}, 9));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(small(i, j), big(i, j));
}

TEST(Experiment, CellsAreReproducibleFromSeeds) {
  const auto cfg = ExperimentConfig::dephasing(30, 4, 4, noise::Block{0.03, 5}, 77);
  const auto f = run_experiment(cfg);
  const auto seq = experiment_sequence(cfg, 2);
  const auto noise = experiment_noise(cfg, 2, 3);
  EXPECT_NEAR(trace_fidelity(noisy_sequence_unitary(seq, noise.axes[2])), f(2, 3), 1e-14);
}

TEST(Experiment, OptimizedKernelAgreesWithReference) {
  const auto psd = noise::FourierPsd::power_law(-1.0, 10, 0.05, 0.05, 1.0);
  for (const auto& cfg :
       {ExperimentConfig::dephasing(100, 20, 8, noise::Markovian{0.015}, 1),
        ExperimentConfig::dephasing(100, 20, 8, noise::Dc{0.015}, 2),
        ExperimentConfig::dephasing(60, 10, 4, psd, 3),
        ExperimentConfig::universal(50, 10, 4,
                                    {std::optional<NoiseModel>{noise::Markovian{0.01}},
                                     std::optional<NoiseModel>{noise::Dc{0.01}},
                                     std::optional<NoiseModel>{noise::Block{0.01, 5}}},
                                    4)}) {
    const auto fast = run_experiment(cfg);
    const auto slow = reference::run_experiment_serial(cfg);
    ASSERT_EQ(fast.values.size(), slow.values.size());
    for (std::size_t c = 0; c < fast.values.size(); ++c) EXPECT_NEAR(fast.values[c], slow.values[c], 1e-12);
  }
}

TEST(Experiment, UniversalZOnlyMatchesDephasingMatrix) {
  const auto d = run_experiment(ExperimentConfig::dephasing(50, 6, 5, noise::Markovian{0.02}, 8));
  const auto u = run_experiment(
      ExperimentConfig::universal(50, 6, 5, {std::nullopt, std::nullopt, NoiseModel{noise::Markovian{0.02}}}, 8));
  EXPECT_EQ(d.values, u.values);
}

TEST(Experiment, AveragesAndCsvRoundTrip) {
  FidelityMatrix f{10, 2, 3, 5, {0.9, 0.8, 0.7, 1.0, 0.5, 0.0}};
  const auto rows = row_average(f);
  EXPECT_NEAR(rows[0], 0.8, 1e-15);
  EXPECT_NEAR(rows[1], 0.5, 1e-15);
  EXPECT_NEAR(grand_mean(f), 0.65, 1e-15);

  const auto g = run_experiment(ExperimentConfig::dephasing(20, 3, 4, noise::Markovian{0.1}, 2));
  std::stringstream ss;
  write_matrix_csv(ss, g);
  const auto back = read_matrix_csv(ss);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.values, g.values);
}

}  // namespace
}  // namespace rbwalk
