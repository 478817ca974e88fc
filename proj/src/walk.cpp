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

#include "rbwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "rbwalk/errors.hpp"
#include "rbwalk/io.hpp"
#include "rbwalk/special_functions.hpp"
#include "rbwalk/stats.hpp"

namespace rbwalk {
namespace {

void check_lengths(const SequenceSpec& seq, const NoiseRealization& noise) {
  detail::require(noise.length() == seq.length(), "noise length " + std::to_string(noise.length()) +
                                                      " does not match sequence length " +
                                                      std::to_string(seq.length()));
}

}  // namespace

double UniversalWalk::total_norm2() const {
  return per_axis[0].norm2() + per_axis[1].norm2() + per_axis[2].norm2();
}

WalkVector walk_vector(const SequenceSpec& seq, const NoiseRealization& noise, Axis axis,
                       const CliffordTable& table) {
  check_lengths(seq, noise);
  const auto dirs = twirl_directions(seq, axis, table);
  WalkVector w;
  for (std::size_t j = 0; j < dirs.size(); ++j)
    w.R[static_cast<std::size_t>(axis_index(dirs[j].axis))] += dirs[j].sign * noise.values[j];
  return w;
}

UniversalWalk walk_vector_universal(const SequenceSpec& seq, const UniversalRealization& noise,
                                    const CliffordTable& table) {
  UniversalWalk u;
  for (Axis a : kAxes) u.per_axis[axis_index(a)] = walk_vector(seq, noise.axes[axis_index(a)], a, table);
  return u;
}

std::array<long long, 3> lattice_walk(const SequenceSpec& seq, Axis axis, const CliffordTable& table) {
  std::array<long long, 3> v{0, 0, 0};
  for (const PauliAxis& d : twirl_directions(seq, axis, table)) v[axis_index(d.axis)] += d.sign;
  return v;
}

std::vector<std::array<double, 3>> walk_path(const SequenceSpec& seq, const NoiseRealization& noise, Axis axis,
                                             const CliffordTable& table) {
  check_lengths(seq, noise);
  const auto dirs = twirl_directions(seq, axis, table);
  std::vector<std::array<double, 3>> path{{0.0, 0.0, 0.0}};
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    auto next = path.back();
    next[static_cast<std::size_t>(axis_index(dirs[j].axis))] += dirs[j].sign * noise.values[j];
    path.push_back(next);
  }
  return path;
}

void write_walk_path_csv(std::ostream& out, const std::vector<std::array<double, 3>>& path) {
  write_csv_row(out, std::vector<std::string>{"j", "x", "y", "z"});
  for (std::size_t j = 0; j < path.size(); ++j)
    write_csv_row(out, std::vector<double>{static_cast<double>(j), path[j][0], path[j][1], path[j][2]});
}

double fidelity_approx(const SequenceSpec& seq, const std::vector<NoiseRealization>& batch,
                       const ApproxRegime& regime, const CliffordTable& table) {
  detail::require(!batch.empty(), "fidelity_approx needs at least one realization");
  NeumaierSum sum;
  for (const auto& noise : batch) sum.add(walk_vector(seq, noise, Axis::Z, table).norm2());
  double correction = 0.0;
  if (const auto* m = std::get_if<approx::Markovian>(&regime)) {
    const double J = seq.length();
    const double s2 = m->sigma * m->sigma;
    correction = 2.0 / 3.0 * J * J * s2 * s2;
  }
  return 1.0 - sum.value() / static_cast<double>(batch.size()) + correction;
}

double lattice_walk_distance_pdf(double r, int J) {
  detail::require(J >= 1, "J must be >= 1");
  if (r <= 0.0) return 0.0;
  const double c = 3.0 / (2.0 * std::numbers::pi * J);
  return std::pow(c, 1.5) * 4.0 * std::numbers::pi * r * r * std::exp(-3.0 * r * r / (2.0 * J));
}

double lattice_walk_distance_cdf(double r, int J) {
  detail::require(J >= 1, "J must be >= 1");
  if (r <= 0.0) return 0.0;
  // r^2 ~ Gamma(3/2, 2J/3)
  return gamma_p(1.5, 3.0 * r * r / (2.0 * J));
}

}  // namespace rbwalk
