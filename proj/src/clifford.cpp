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

#include "rbwalk/clifford.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string_view>

#include "rbwalk/errors.hpp"

namespace rbwalk {
namespace {

struct Row {
  const char* action;  // images of X, Y, Z
  const char* recipe;  // elementary rotations, multiplied left to right
};

// Representation of the single-qubit Clifford group. R+ and R- denote the
// clockwise and counter-clockwise pi/2 rotations about an axis; X, Y, Z are pi
// rotations.
constexpr std::array<Row, kCliffordCount> kRows = {{
    {"+X +Y +Z", "I"},        {"+X -Y -Z", "X"},        {"-X +Y -Z", "Y"},        {"-X -Y +Z", "Z"},
    {"+X -Z +Y", "Rx+"},      {"+Z +Y -X", "Ry+"},      {"-Y +X +Z", "Rz+"},      {"+X +Z -Y", "Rx-"},
    {"-Z +Y +X", "Ry-"},      {"+Y -X +Z", "Rz-"},      {"-X -Z -Y", "Z Rx+"},    {"-X +Z +Y", "Z Rx-"},
    {"-Y -X -Z", "Rz+ X"},    {"+Y +X -Z", "Rz- X"},    {"-Y -Z +X", "Rz+ Rx+"},  {"-Y +Z -X", "Rz+ Rx-"},
    {"-Z -X +Y", "Rx+ Rz-"},  {"-Z -Y -X", "Z Ry-"},    {"-Z +X -Y", "Rz+ Ry-"},  {"+Z -X -Y", "Rz- Ry+"},
    {"+Z -Y +X", "Z Ry+"},    {"+Y -Z -X", "Rz- Rx+"},  {"+Z +X +Y", "Rz+ Ry+"},  {"+Y +Z +X", "Rz- Rx-"},
}};

Axis parse_axis(char c) {
  switch (c) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
    default: throw NumericalError(std::string("bad axis label ") + c);
  }
}

SignedPermutation parse_action(std::string_view text) {
  SignedPermutation p;
  std::istringstream in{std::string(text)};
  std::string token;
  for (auto& image : p.image) {
    in >> token;
    image = PauliAxis{parse_axis(token.at(1)), token.at(0) == '-' ? -1 : 1};
  }
  return p;
}

// exp(-i theta sigma / 2)
Mat2 su2_rotation(Axis a, double theta) {
  const Complex c{std::cos(theta / 2.0), 0.0};
  const Complex s{0.0, -std::sin(theta / 2.0)};
  return Mat2{{c, {}, {}, c}} + s * pauli(a);
}

Mat2 elementary(std::string_view token) {
  if (token == "I") return Mat2::identity();
  const Axis a = parse_axis(token.back() == '+' || token.back() == '-' ? token[1] : token[0]);
  if (token.size() == 1) return su2_rotation(a, std::numbers::pi);
  // Clockwise looking down the axis toward the origin: theta = -pi/2.
  return su2_rotation(a, token.back() == '+' ? -std::numbers::pi / 2 : std::numbers::pi / 2);
}

Mat2 from_recipe(std::string_view recipe) {
  Mat2 m = Mat2::identity();
  std::istringstream in{std::string(recipe)};
  std::string token;
  while (in >> token) m = m * elementary(token);
  return m;
}

// Multiplies by a global phase that turns every entry into an exact dyadic
// Gaussian rational in {0, +-1, +-i, (+-1 +-i)/2}. The set is closed under
// multiplication, so noiseless sequence products are exact in floating point.
Mat2 dyadic_representative(const Mat2& u) {
  const Complex* lead = nullptr;
  for (const Complex& e : u.m)
    if (std::abs(e) > 0.5) {
      lead = &e;
      break;
    }
  if (!lead) throw NumericalError("Clifford matrix has no dominant entry");
  const Complex target = std::abs(*lead) > 0.9 ? Complex{1.0, 0.0} : Complex{0.5, 0.5};
  Mat2 out = (target / *lead) * u;
  for (Complex& e : out.m) {
    const double re = std::round(2.0 * e.real()) / 2.0;
    const double im = std::round(2.0 * e.imag()) / 2.0;
    if (std::abs(re - e.real()) > 1e-12 || std::abs(im - e.imag()) > 1e-12)
      throw NumericalError("Clifford matrix has no dyadic phase representative");
    e = Complex{re, im};
  }
  return out;
}

// Entrywise comparison of U P U^dagger against the signed Pauli image.
double conjugation_mismatch(const Mat2& u, Axis p, const PauliAxis& image) {
  const Mat2 conj = u * pauli(p) * u.adjoint();
  const Mat2 expected = Complex{static_cast<double>(image.sign), 0.0} * pauli(image.axis);
  return max_abs_diff(conj, expected);
}

}  // namespace

std::array<int, 3> PauliAxis::vector() const {
  std::array<int, 3> v{0, 0, 0};
  v[static_cast<std::size_t>(axis_index(axis))] = sign;
  return v;
}

PauliAxis SignedPermutation::apply(const PauliAxis& p) const {
  const PauliAxis& img = (*this)[p.axis];
  return PauliAxis{img.axis, img.sign * p.sign};
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
  SignedPermutation out;
  for (Axis a : kAxes) out.image[axis_index(a)] = apply(inner[a]);
  return out;
}

int SignedPermutation::determinant() const {
  std::array<std::array<int, 3>, 3> m{};
  for (int c = 0; c < 3; ++c) {
    const auto v = image[c].vector();
    for (int r = 0; r < 3; ++r) m[r][c] = v[r];
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

CliffordTable CliffordTable::build() {
  CliffordTable t;
  for (int i = 0; i < kCliffordCount; ++i) {
    CliffordElement& e = t.elements_[i];
    e.index = i + 1;
    e.name = kRows[i].recipe;
    e.matrix = dyadic_representative(from_recipe(kRows[i].recipe));
    e.action = parse_action(kRows[i].action);
    if (unitarity_defect(e.matrix) > 1e-12)
      throw NumericalError("Clifford element " + std::to_string(i + 1) + " is not unitary");
    if (e.action.determinant() != 1)
      throw NumericalError("Clifford element " + std::to_string(i + 1) + " action is not a proper rotation");
    for (Axis a : kAxes) {
      if (conjugation_mismatch(e.matrix, a, e.action[a]) > 1e-12)
        throw NumericalError("Clifford element " + std::to_string(i + 1) + " matrix disagrees with its action on " +
                             axis_name(a));
    }
  }
  for (int i = 0; i < kCliffordCount; ++i) {
    for (int j = 0; j < kCliffordCount; ++j) {
      const Mat2 product = t.elements_[i].matrix * t.elements_[j].matrix;
      int found = -1;
      for (int r = 0; r < kCliffordCount; ++r) {
        if (equal_up_to_phase(product, t.elements_[r].matrix)) {
          if (found >= 0) throw NumericalError("Clifford table has duplicate elements");
          found = r;
        }
      }
      if (found < 0) throw NumericalError("Clifford table is not closed under composition");
      if (t.elements_[found].action != t.elements_[i].action.compose(t.elements_[j].action))
        throw NumericalError("Clifford composition disagrees with action composition");
      t.compose_[i][j] = static_cast<std::uint8_t>(found + 1);
      if (found == 0) t.inverse_[i] = static_cast<std::uint8_t>(j + 1);
    }
  }
  return t;
}

const CliffordTable& CliffordTable::instance() {
  static const CliffordTable table = build();
  return table;
}

const CliffordElement& CliffordTable::element(int index) const {
  detail::require(index >= 1 && index <= kCliffordCount, "Clifford index must lie in 1..24");
  return elements_[static_cast<std::size_t>(index - 1)];
}

int CliffordTable::compose(int a, int b) const { return compose_[a - 1][b - 1]; }

int CliffordTable::inverse(int a) const { return inverse_[a - 1]; }

int sequence_product(const std::vector<std::uint8_t>& indices, const CliffordTable& table) {
  int k = 1;
  for (std::uint8_t idx : indices) k = table.compose(k, idx);
  return k;
}

SequenceSpec SequenceSpec::from_indices(std::vector<std::uint8_t> indices, const CliffordTable& table) {
  detail::require(!indices.empty(), "sequence must contain at least one gate");
  for (std::uint8_t idx : indices)
    detail::require(idx >= 1 && idx <= kCliffordCount, "Clifford index must lie in 1..24");
  detail::require(sequence_product(indices, table) == 1, "sequence product is not the identity");
  SequenceSpec s;
  s.indices_ = std::move(indices);
  return s;
}

SequenceSpec sample_sequence(int J, Stream& rng, const CliffordTable& table) {
  detail::require(J >= 2, "sample_sequence requires J >= 2");
  std::vector<std::uint8_t> indices(static_cast<std::size_t>(J));
  int k = 1;
  for (int j = 0; j + 1 < J; ++j) {
    const int idx = static_cast<int>(rng.below(kCliffordCount)) + 1;
    indices[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(idx);
    k = table.compose(k, idx);
  }
  indices.back() = static_cast<std::uint8_t>(table.inverse(k));
  return SequenceSpec::from_indices(std::move(indices), table);
}

Mat2 sequence_matrix(const SequenceSpec& seq, const CliffordTable& table) {
  Mat2 m = Mat2::identity();
  for (std::uint8_t idx : seq.indices()) m = m * table.element(idx).matrix;
  return m;
}

std::vector<PauliAxis> twirl_directions(const SequenceSpec& seq, Axis axis, const CliffordTable& table) {
  std::vector<PauliAxis> out;
  out.reserve(seq.indices().size());
  int k = 1;
  for (std::uint8_t idx : seq.indices()) {
    out.push_back(table.element(k).action[axis]);
    k = table.compose(k, idx);
  }
  return out;
}

}  // namespace rbwalk
