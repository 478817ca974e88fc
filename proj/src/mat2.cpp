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

#include "rbwalk/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace rbwalk {

char axis_name(Axis a) { return "XYZ"[axis_index(a)]; }

Complex Mat2::determinant() const { return cmul(m[0], m[3]) - cmul(m[1], m[2]); }

Mat2 Mat2::adjoint() const { return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2{{cmul(a.m[0], b.m[0]) + cmul(a.m[1], b.m[2]), cmul(a.m[0], b.m[1]) + cmul(a.m[1], b.m[3]),
               cmul(a.m[2], b.m[0]) + cmul(a.m[3], b.m[2]), cmul(a.m[2], b.m[1]) + cmul(a.m[3], b.m[3])}};
}

Mat2 operator*(Complex s, const Mat2& a) {
  return Mat2{{cmul(s, a.m[0]), cmul(s, a.m[1]), cmul(s, a.m[2]), cmul(s, a.m[3])}};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2{{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2{{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
  return worst;
}

double phase_overlap(const Mat2& a, const Mat2& b) { return std::abs((a.adjoint() * b).trace()) / 2.0; }

bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol) { return std::abs(phase_overlap(a, b) - 1.0) <= tol; }

double unitarity_defect(const Mat2& u) { return max_abs_diff(u.adjoint() * u, Mat2::identity()); }

const Mat2& pauli(Axis a) {
  static const std::array<Mat2, 3> kPauli = {
      Mat2{{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}},
      Mat2{{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}},
      Mat2{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}},
  };
  return kPauli[axis_index(a)];
}

Mat2 z_rotation(double delta) {
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  return Mat2{{Complex{c, -s}, Complex{0, 0}, Complex{0, 0}, Complex{c, s}}};
}

Mat2 rotation(const std::array<double, 3>& d) {
  if (d[0] == 0.0 && d[1] == 0.0) return z_rotation(d[2]);
  const double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  const double c = std::cos(norm);
  const double s = std::sin(norm) / norm;
  const double nx = s * d[0];
  const double ny = s * d[1];
  const double nz = s * d[2];
  // c I - i (nx X + ny Y + nz Z)
  return Mat2{{Complex{c, -nz}, Complex{-ny, -nx}, Complex{ny, -nx}, Complex{c, nz}}};
}

}  // namespace rbwalk
