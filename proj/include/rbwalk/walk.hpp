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
#include <iosfwd>
#include <variant>
#include <vector>

#include "rbwalk/clifford.hpp"
#include "rbwalk/noise.hpp"

namespace rbwalk {

/// Pauli-space walk R = sum_j delta_j r_j (radians).
struct WalkVector {
  std::array<double, 3> R{0.0, 0.0, 0.0};
  double norm2() const { return R[0] * R[0] + R[1] * R[1] + R[2] * R[2]; }
};

/// One walk per error axis mu, each built from the twirls of sigma_mu.
struct UniversalWalk {
  std::array<WalkVector, 3> per_axis{};
  /// Leading-order infidelity sum_mu |R^(mu)|^2.
  double total_norm2() const;
};

/// R for a dephasing-type series acting along `axis` (Z by default).
WalkVector walk_vector(const SequenceSpec& seq, const NoiseRealization& noise, Axis axis = Axis::Z,
                       const CliffordTable& table = CliffordTable::instance());

UniversalWalk walk_vector_universal(const SequenceSpec& seq, const UniversalRealization& noise,
                                    const CliffordTable& table = CliffordTable::instance());

/// Integer lattice walk V = sum_j r_j (unit steps).
std::array<long long, 3> lattice_walk(const SequenceSpec& seq, Axis axis = Axis::Z,
                                      const CliffordTable& table = CliffordTable::instance());

/// Cumulative walk positions after each step, for plotting.
std::vector<std::array<double, 3>> walk_path(const SequenceSpec& seq, const NoiseRealization& noise,
                                             Axis axis = Axis::Z,
                                             const CliffordTable& table = CliffordTable::instance());

/// CSV with columns j,x,y,z; row j = 0 is the origin.
void write_walk_path_csv(std::ostream& out, const std::vector<std::array<double, 3>>& path);

namespace approx {

/// Adds the fourth-order constant 2/3 J^2 sigma^4.
struct Markovian {
  double sigma = 0.0;
};
/// No higher-order offset.
struct Dc {};
/// No higher-order offset.
struct Generic {};

}  // namespace approx

using ApproxRegime = std::variant<approx::Markovian, approx::Dc, approx::Generic>;

/// 1 - mean_r |R_r|^2 + correction over a batch of realizations for one
/// sequence.
double fidelity_approx(const SequenceSpec& seq, const std::vector<NoiseRealization>& batch,
                       const ApproxRegime& regime, const CliffordTable& table = CliffordTable::instance());

/// Continuum density of the end-to-end distance of a J-step unbiased lattice
/// walk: (3 / (2 pi J))^{3/2} 4 pi r^2 exp(-3 r^2 / (2J)).
double lattice_walk_distance_pdf(double r, int J);

/// CDF of the same density.
double lattice_walk_distance_cdf(double r, int J);

}  // namespace rbwalk
