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
#include <string>
#include <vector>

#include "rbwalk/mat2.hpp"
#include "rbwalk/rng.hpp"

namespace rbwalk {

inline constexpr int kCliffordCount = 24;

/// A signed Cartesian axis: one of +-X, +-Y, +-Z.
struct PauliAxis {
  Axis axis = Axis::Z;
  int sign = 1;

  std::array<int, 3> vector() const;
  friend bool operator==(const PauliAxis&, const PauliAxis&) = default;
};

/// Images of X, Y, Z under conjugation C P C^dagger.
struct SignedPermutation {
  std::array<PauliAxis, 3> image{};

  const PauliAxis& operator[](Axis a) const { return image[axis_index(a)]; }
  PauliAxis apply(const PauliAxis& p) const;

  /// (this o inner)(P) = this(inner(P)).
  SignedPermutation compose(const SignedPermutation& inner) const;

  /// Determinant of the associated 3x3 signed permutation matrix.
  int determinant() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct CliffordElement {
  int index = 1;  // 1..24
  /// Product of the elementary rotations times a global phase chosen so that
  /// every entry is one of 0, +-1, +-i, (+-1 +-i)/2.
  Mat2 matrix;
  SignedPermutation action;
  std::string name;  // product of elementary rotations, for example "Rz+ Rx-"
};

/// The 24-element single-qubit Clifford group with exact composition and
/// inverse tables. Immutable after construction and safe to share.
class CliffordTable {
 public:
  /// Builds the group from elementary rotations and validates every element's
  /// matrix against its tabulated Pauli action. Throws NumericalError on any
  /// inconsistency.
  static CliffordTable build();

  /// Process-wide table built on first use.
  static const CliffordTable& instance();

  const CliffordElement& element(int index) const;
  const std::array<CliffordElement, kCliffordCount>& elements() const { return elements_; }

  /// Index of C_a C_b.
  int compose(int a, int b) const;
  int inverse(int a) const;

 private:
  std::array<CliffordElement, kCliffordCount> elements_{};
  std::array<std::array<std::uint8_t, kCliffordCount>, kCliffordCount> compose_{};
  std::array<std::uint8_t, kCliffordCount> inverse_{};
};

/// Length-J Clifford index sequence whose product is the identity.
class SequenceSpec {
 public:
  SequenceSpec() = default;

  /// Validates indices in 1..24 and identity closure; throws InvalidArgument.
  static SequenceSpec from_indices(std::vector<std::uint8_t> indices,
                                   const CliffordTable& table = CliffordTable::instance());

  const std::vector<std::uint8_t>& indices() const { return indices_; }
  int length() const { return static_cast<int>(indices_.size()); }
  int operator[](int j) const { return indices_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<std::uint8_t> indices_;
};

/// First J-1 indices i.i.d. uniform, last one closes the product to identity.
SequenceSpec sample_sequence(int J, Stream& rng, const CliffordTable& table = CliffordTable::instance());

/// Group index of C_{eta_1} ... C_{eta_m} for an arbitrary index list.
int sequence_product(const std::vector<std::uint8_t>& indices, const CliffordTable& table = CliffordTable::instance());

/// Matrix product of the sequence elements, left to right.
Mat2 sequence_matrix(const SequenceSpec& seq, const CliffordTable& table = CliffordTable::instance());

/// Signed directions r_m = K_{m-1} P K_{m-1}^dagger for m = 1..J, computed by
/// integer composition only. K_0 is the identity.
std::vector<PauliAxis> twirl_directions(const SequenceSpec& seq, Axis axis = Axis::Z,
                                        const CliffordTable& table = CliffordTable::instance());

}  // namespace rbwalk
