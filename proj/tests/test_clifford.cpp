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

#include <array>
#include <cmath>

#include "rbwalk/clifford.hpp"
#include "rbwalk/errors.hpp"
#include "rbwalk/stats.hpp"

namespace rbwalk {
namespace {

const CliffordTable& table() { return CliffordTable::instance(); }

PauliAxis px(int s) { return {Axis::X, s}; }
PauliAxis py(int s) { return {Axis::Y, s}; }
PauliAxis pz(int s) { return {Axis::Z, s}; }

TEST(Clifford, IdentityElementFixesEveryAxis) {
  const auto& a = table().element(1).action;
  EXPECT_EQ(a[Axis::X], px(1));
  EXPECT_EQ(a[Axis::Y], py(1));
  EXPECT_EQ(a[Axis::Z], pz(1));
}

TEST(Clifford, RxPlusMapsZToY) {
  const auto& a = table().element(5).action;
  EXPECT_EQ(a[Axis::X], px(1));
  EXPECT_EQ(a[Axis::Y], pz(-1));
  EXPECT_EQ(a[Axis::Z], py(1));
}

TEST(Clifford, HadamardMapsZToX) {
  const auto& a = table().element(21).action;
  EXPECT_EQ(a[Axis::X], pz(1));
  EXPECT_EQ(a[Axis::Y], py(-1));
  EXPECT_EQ(a[Axis::Z], px(1));
}

TEST(Clifford, ElementsAreUnitaryProperRotations) {
  for (const auto& e : table().elements()) {
    EXPECT_LE(unitarity_defect(e.matrix), 1e-12) << e.index;
    EXPECT_EQ(e.action.determinant(), 1) << e.index;
  }
}

TEST(Clifford, MatrixEntriesAreExactDyadicValues) {
  for (const auto& e : table().elements())
    for (const Complex& z : e.matrix.m) {
      EXPECT_EQ(z.real() * 2.0, std::round(z.real() * 2.0));
      EXPECT_EQ(z.imag() * 2.0, std::round(z.imag() * 2.0));
    }
}

TEST(Clifford, ExhaustiveTwirlMatchesMatrixConjugation) {
  for (const auto& e : table().elements()) {
    for (Axis p : kAxes) {
      const Mat2 conj = e.matrix * pauli(p) * e.matrix.adjoint();
      const PauliAxis img = e.action[p];
      const Mat2 expected = Complex{double(img.sign), 0.0} * pauli(img.axis);
      EXPECT_LE(max_abs_diff(conj, expected), 1e-12) << "element " << e.index << " axis " << axis_name(p);
    }
  }
}

TEST(Clifford, ElementsAreDistinct) {
  for (int a = 1; a <= 24; ++a)
    for (int b = a + 1; b <= 24; ++b)
      EXPECT_FALSE(equal_up_to_phase(table().element(a).matrix, table().element(b).matrix)) << a << "," << b;
}

TEST(Clifford, CompositionTableMatchesMatrixProducts) {
  for (int a = 1; a <= 24; ++a)
    for (int b = 1; b <= 24; ++b) {
      const int c = table().compose(a, b);
      ASSERT_GE(c, 1);
      ASSERT_LE(c, 24);
      EXPECT_TRUE(equal_up_to_phase(table().element(a).matrix * table().element(b).matrix, table().element(c).matrix));
    }
}

TEST(Clifford, InversesCloseToIdentity) {
  for (int a = 1; a <= 24; ++a) {
    EXPECT_EQ(table().compose(a, table().inverse(a)), 1);
    EXPECT_EQ(table().compose(table().inverse(a), a), 1);
  }
  EXPECT_EQ(table().inverse(5), 8);
  EXPECT_EQ(table().inverse(1), 1);
}

TEST(Clifford, CompositionIsAssociative) {
  Stream rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int a = int(rng.below(24)) + 1, b = int(rng.below(24)) + 1, c = int(rng.below(24)) + 1;
    EXPECT_EQ(table().compose(table().compose(a, b), c), table().compose(a, table().compose(b, c)));
  }
}

TEST(Clifford, BuildIsDeterministic) {
  const CliffordTable again = CliffordTable::build();
  for (int a = 1; a <= 24; ++a) {
    EXPECT_EQ(again.element(a).action, table().element(a).action);
    EXPECT_EQ(max_abs_diff(again.element(a).matrix, table().element(a).matrix), 0.0);
  }
}

TEST(Sequence, TwoGateSequenceClosesWithInverse) {
  const SequenceSpec s = SequenceSpec::from_indices({5, 8});
  EXPECT_EQ(s[1], table().inverse(5));
  const SequenceSpec id = SequenceSpec::from_indices({1, 1});
  EXPECT_EQ(id[1], 1);
}

TEST(Sequence, SampledSequencesCloseToIdentity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Stream rng(seed);
    const int J = 2 + int(seed % 60);
    const SequenceSpec s = sample_sequence(J, rng);
    ASSERT_EQ(s.length(), J);
    EXPECT_EQ(s[J - 1], table().inverse(sequence_product(std::vector<std::uint8_t>(s.indices().begin(), s.indices().end() - 1))));
    const Mat2 m = sequence_matrix(s);
    EXPECT_NEAR(std::abs(m.trace()) / 2.0, 1.0, 1e-10);
  }
}

TEST(Sequence, RejectsInvalidInput) {
  EXPECT_THROW(SequenceSpec::from_indices({5}), InvalidArgument);
  EXPECT_THROW(SequenceSpec::from_indices({0, 1}), InvalidArgument);
  EXPECT_THROW(SequenceSpec::from_indices({25, 1}), InvalidArgument);
  EXPECT_THROW(SequenceSpec::from_indices({}), InvalidArgument);
  Stream rng(1);
  EXPECT_THROW(sample_sequence(1, rng), InvalidArgument);
}

TEST(Twirl, FirstDirectionIsTheNoiseAxis) {
  Stream rng(3);
  const SequenceSpec s = sample_sequence(10, rng);
  EXPECT_EQ(twirl_directions(s, Axis::Z)[0].vector(), (std::array<int, 3>{0, 0, 1}));
  EXPECT_EQ(twirl_directions(s, Axis::X)[0].vector(), (std::array<int, 3>{1, 0, 0}));
}

TEST(Twirl, PrefixRxPlusSendsZToY) {
  const auto dirs = twirl_directions(SequenceSpec::from_indices({5, 8}), Axis::Z);
  EXPECT_EQ(dirs[1].vector(), (std::array<int, 3>{0, 1, 0}));
}

TEST(Twirl, PrefixHadamardSendsZToX) {
  const auto dirs = twirl_directions(SequenceSpec::from_indices({21, 21}), Axis::Z);
  EXPECT_EQ(dirs[1].vector(), (std::array<int, 3>{1, 0, 0}));
}

TEST(Twirl, MatchesMatrixConjugationOfPrefix) {
  Stream rng(11);
  const SequenceSpec s = sample_sequence(40, rng);
  for (Axis axis : kAxes) {
    const auto dirs = twirl_directions(s, axis);
    Mat2 k = Mat2::identity();
    for (int m = 0; m < s.length(); ++m) {
      const Mat2 p = k * pauli(axis) * k.adjoint();
      const Mat2 expected = Complex{double(dirs[m].sign), 0.0} * pauli(dirs[m].axis);
      EXPECT_LE(max_abs_diff(p, expected), 1e-12);
      k = k * table().element(s[m]).matrix;
    }
  }
}

TEST(Twirl, DirectionsAreUniformOverSignedAxes) {
  std::array<double, 6> counts{};
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Stream rng(derive_seed(99, {seed}));
    const auto dirs = twirl_directions(sample_sequence(20, rng), Axis::Z);
    for (std::size_t m = 1; m < dirs.size(); ++m)
      counts[2 * axis_index(dirs[m].axis) + (dirs[m].sign > 0 ? 0 : 1)] += 1.0;
  }
  double total = 0.0;
  for (double c : counts) total += c;
  const std::array<double, 6> expected{total / 6, total / 6, total / 6, total / 6, total / 6, total / 6};
  const ChiSquareResult r = chi_square_test(counts, expected);
  EXPECT_GT(r.p_value, 0.001) << r.statistic;
}

}  // namespace
}  // namespace rbwalk
