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
#include <complex>
#include <cstdint>

namespace rbwalk {

using Complex = std::complex<double>;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

constexpr int axis_index(Axis a) { return static_cast<int>(a); }

char axis_name(Axis a);

// 2x2 complex matrix, row-major. Products are written out by hand: the
// libstdc++ complex multiply goes through __muldc3 for NaN/Inf recovery, which
// dominates the inner loop of the simulator.
struct Mat2 {
  std::array<Complex, 4> m{};

  static constexpr Mat2 identity() { return Mat2{{Complex{1.0, 0.0}, {}, {}, Complex{1.0, 0.0}}}; }

  constexpr const Complex& operator()(int row, int col) const { return m[2 * row + col]; }
  constexpr Complex& operator()(int row, int col) { return m[2 * row + col]; }

  Complex trace() const { return m[0] + m[3]; }
  Complex determinant() const;
  Mat2 adjoint() const;
};

inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& a);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Mat2& a, const Mat2& b);

/// |Tr(A^dagger B)| / 2; equals 1 exactly when A and B agree up to a global
/// phase (for unitary A, B).
double phase_overlap(const Mat2& a, const Mat2& b);

bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol = 1e-10);

/// max |(U^dagger U - I)_{ij}|
double unitarity_defect(const Mat2& u);

const Mat2& pauli(Axis a);

/// exp(-i delta Z), the dephasing error unitary.
Mat2 z_rotation(double delta);

/// exp(-i (dx X + dy Y + dz Z)) evaluated in closed form as
/// cos|D| I - i sin|D| (D/|D|).sigma. When the x and y components are both
/// zero the result is bit-identical to z_rotation(dz).
Mat2 rotation(const std::array<double, 3>& d);

}  // namespace rbwalk
