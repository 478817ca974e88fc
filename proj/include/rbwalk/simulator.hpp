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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbwalk/clifford.hpp"
#include "rbwalk/mat2.hpp"
#include "rbwalk/noise.hpp"

namespace rbwalk {

enum class ErrorMode { dephasing, universal };

std::string mode_name(ErrorMode mode);

/// One RB experiment at fixed J: k sequences, n noise realizations each.
struct ExperimentConfig {
  int J = 2;
  int k = 1;
  int n = 1;
  ErrorMode mode = ErrorMode::dephasing;
  /// Noise on the X, Y, Z error axes. Dephasing uses only Z; in universal
  /// mode an empty slot means no error about that axis.
  std::array<std::optional<NoiseModel>, 3> axes{};
  std::uint64_t master_seed = 0;

  static ExperimentConfig dephasing(int J, int k, int n, NoiseModel model, std::uint64_t seed);
  static ExperimentConfig universal(int J, int k, int n, std::array<std::optional<NoiseModel>, 3> axes,
                                    std::uint64_t seed);

  /// Throws InvalidArgument when counts or models are out of range.
  void validate() const;
};

/// Seed derivation: sequence i draws from derive_seed(master, {sequence, i});
/// realization j of sequence i on error axis a draws from
/// derive_seed(master, {noise, i, j, a}). Adding rows or columns never
/// changes existing cells.
std::uint64_t sequence_seed(std::uint64_t master, int i);
std::uint64_t noise_seed(std::uint64_t master, int i, int j, Axis axis);

/// Regenerates the sequence and noise used by cell (i, j).
SequenceSpec experiment_sequence(const ExperimentConfig& cfg, int i);
UniversalRealization experiment_noise(const ExperimentConfig& cfg, int i, int j);

/// k x n fidelities, row-major.
struct FidelityMatrix {
  int J = 0;
  int k = 0;
  int n = 0;
  std::uint64_t master_seed = 0;
  std::vector<double> values;

  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
};

/// U_1 C_1 U_2 C_2 ... U_J C_J with U_j = exp(-i delta_j Z).
Mat2 noisy_sequence_unitary(const SequenceSpec& seq, const NoiseRealization& noise,
                            const CliffordTable& table = CliffordTable::instance());

/// Same with U_j = exp(-i Delta_j . sigma).
Mat2 noisy_sequence_unitary(const SequenceSpec& seq, const UniversalRealization& noise,
                            const CliffordTable& table = CliffordTable::instance());

/// |Tr U|^2 / 4. Values above 1 by at most 1e-12 are clamped; larger
/// excursions or NaN throw NumericalError.
double trace_fidelity(const Mat2& u);

/// Parallel (OpenMP) Monte Carlo. Every cell is computed from its own
/// streams, so the result is bit-identical for any thread count.
/// `threads` <= 0 uses the OpenMP default.
FidelityMatrix run_experiment(const ExperimentConfig& cfg, int threads = 0);

namespace reference {

/// Single-threaded textbook implementation: fresh samplers per cell and
/// generic matrix exponentials and products. Kept as an oracle for the
/// optimized kernel; agrees with it to rounding.
FidelityMatrix run_experiment_serial(const ExperimentConfig& cfg);

}  // namespace reference

/// Noise-averaged fidelity per sequence (compensated).
std::vector<double> row_average(const FidelityMatrix& f);

/// Mean over all k n cells (compensated).
double grand_mean(const FidelityMatrix& f);

/// CSV with header r=1..r=n, one row per sequence.
void write_matrix_csv(std::ostream& out, const FidelityMatrix& f);
FidelityMatrix read_matrix_csv(std::istream& in);

}  // namespace rbwalk
