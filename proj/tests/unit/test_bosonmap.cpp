// Copyright 2026 The qedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qedsim/bosonmap.hpp"

namespace qedsim {
namespace {

using oracle::max_abs;

HalfInteger spin(int twice) { return HalfInteger::from_twice(twice); }

// Projection of a unary-register operator onto the Fock states it encodes.
DenseOperator unary_block(const PauliSum& op, int n_max) {
  const DenseOperator full = matrix_of(op);
  DenseOperator block(n_max + 1, n_max + 1);
  for (int r = 0; r <= n_max; ++r) {
    for (int c = 0; c <= n_max; ++c) {
      block(r, c) = full(static_cast<Eigen::Index>(unary_basis_index(r, n_max)),
                         static_cast<Eigen::Index>(unary_basis_index(c, n_max)));
    }
  }
  return block;
}

TEST(HalfInteger, ParsesHalvesAndRejectsOthers) {
  EXPECT_EQ(HalfInteger::from_double(1.5).twice(), 3);
  EXPECT_EQ(HalfInteger::from_double(2.0).multiplicity(), 5);
  EXPECT_EQ(spin(3).str(), "3/2");
  EXPECT_THROW(HalfInteger::from_double(0.3), std::invalid_argument);
  EXPECT_THROW(HalfInteger::from_twice(-1), std::invalid_argument);
}

TEST(BosonOps, NumberIsAscendingDiagonal) {
  const BosonOps b = boson_ops(3);
  for (int n = 0; n <= 3; ++n) EXPECT_NEAR(b.number(n, n).real(), n, 1e-15);
  EXPECT_LT(max_abs(b.number - b.number.diagonal().asDiagonal().toDenseMatrix()), 1e-15);
}

TEST(BosonOps, LadderEntriesAndPairing) {
  const BosonOps b = boson_ops(3);
  EXPECT_NEAR(b.create(1, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(b.create(2, 1).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b.create(3, 2).real(), std::sqrt(3.0), 1e-15);
  EXPECT_LT(max_abs(b.annihilate - b.create.adjoint()), 1e-15);
  EXPECT_LT(max_abs(b.create * b.annihilate - b.number), 1e-14);
}

TEST(BosonOps, DescendingVariantHasSuperdiagonalRootsThreeTwoOne) {
  const DenseOperator desc = reversed_order(boson_ops(3).create);
  EXPECT_NEAR(desc(0, 1).real(), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(desc(1, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(desc(2, 3).real(), 1.0, 1e-15);
}

TEST(BosonOps, CommutatorDeviatesOnlyInTheTruncatedCorner) {
  const BosonOps b = boson_ops(4);
  DenseOperator c = b.create * b.annihilate - b.annihilate * b.create + oracle::identity(5);
  EXPECT_NEAR(c(4, 4).real(), 5.0, 1e-13);
  c(4, 4) = 0.0;
  EXPECT_LT(max_abs(c), 1e-14);
}

TEST(BosonOps, RejectsEmptyTruncation) { EXPECT_THROW(boson_ops(0), std::invalid_argument); }

TEST(Transition, BuildsSingleMatrixElement) {
  const DenseOperator m = matrix_of(transition(5, 2, 3));
  DenseOperator expected = DenseOperator::Zero(8, 8);
  expected(5, 2) = 1.0;
  EXPECT_LT(max_abs(m - expected), 1e-15);
}

TEST(OneToOne, SingleModeMovesVacuumToOneExcitation) {
  const DenseOperator block = unary_block(one_to_one_create(1), 1);
  EXPECT_NEAR(std::abs(block(1, 0) - Complex{1.0, 0.0}), 0.0, 1e-15);
}

TEST(OneToOne, RaisesOneToTwoWithRootTwo) {
  const PauliSum bd = one_to_one_create(2);
  const DenseOperator full = matrix_of(bd);
  const auto from = static_cast<Eigen::Index>(unary_basis_index(1, 2));
  const auto to = static_cast<Eigen::Index>(unary_basis_index(2, 2));
  EXPECT_NEAR(std::abs(full(to, from) - Complex{std::sqrt(2.0), 0.0}), 0.0, 1e-14);
  // Nothing else is reached from encoded |1>.
  EXPECT_NEAR(full.col(from).norm(), std::sqrt(2.0), 1e-14);
}

TEST(OneToOne, UnaryBlockEqualsTruncatedCreation) {
  for (int n_max : {1, 3, 7}) {
    EXPECT_LT(max_abs(unary_block(one_to_one_create(n_max), n_max) - boson_ops(n_max).create),
              1e-12)
        << n_max;
  }
}

TEST(Binary, OneQubitMapsZeroToOne) {
  const DenseOperator m = matrix_of(binary_create(1));
  EXPECT_NEAR(std::abs(m(1, 0) - Complex{1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(max_abs(m), 1.0, 1e-15);
}

TEST(Binary, TwoQubitsHaveSubdiagonalOneRootTwoRootThree) {
  const DenseOperator m = matrix_of(binary_create(2));
  EXPECT_NEAR(m(1, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(m(2, 1).real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(m(3, 2).real(), std::sqrt(3.0), 1e-14);
  // Strings {I,Z}(x){X,Y} from the two carry-free steps and {X,Y}(x){X,Y} from the carry.
  EXPECT_EQ(binary_create(2).size(), 8U);
}

TEST(Binary, MatchesTruncatedCreationUpToSevenPhotons) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const int n_max = (1 << n) - 1;
    EXPECT_LT(max_abs(matrix_of(binary_create(n)) - boson_ops(n_max).create), 1e-12) << n;
  }
}

TEST(SpinOps, HalfIsHalfPauli) {
  const SpinOps s = spin_ops(spin(1));
  EXPECT_LT(max_abs(s.sx - 0.5 * oracle::pauli('X')), 1e-15);
  EXPECT_LT(max_abs(s.sy - 0.5 * oracle::pauli('Y')), 1e-15);
  EXPECT_LT(max_abs(s.sz - 0.5 * oracle::pauli('Z')), 1e-15);
}

TEST(SpinOps, ThreeHalvesDiagonalAndLadder) {
  const SpinOps s = spin_ops(spin(3));
  const double expected_z[] = {1.5, 0.5, -0.5, -1.5};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(s.sz(k, k).real(), expected_z[k], 1e-15);
  EXPECT_NEAR(s.s_plus(0, 1).real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(s.s_plus(1, 2).real(), 2.0, 1e-14);
  EXPECT_NEAR(s.s_plus(2, 3).real(), std::sqrt(3.0), 1e-14);
}

TEST(SpinOps, SatisfyTheAngularMomentumAlgebra) {
  for (int twice = 1; twice <= 9; ++twice) {
    const SpinOps s = spin_ops(spin(twice));
    const DenseOperator comm = s.sx * s.sy - s.sy * s.sx;
    EXPECT_LT(max_abs(comm - Complex{0.0, 1.0} * s.sz), 1e-12) << twice;
    EXPECT_LT(max_abs(s.s_plus - (s.sx + Complex{0.0, 1.0} * s.sy)), 1e-14);
    EXPECT_LT(max_abs(s.s_minus - (s.sx - Complex{0.0, 1.0} * s.sy)), 1e-14);
    const double casimir = 0.5 * twice * (0.5 * twice + 1.0);
    const DenseOperator s2 = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
    EXPECT_LT(max_abs(s2 - casimir * oracle::identity(twice + 1)), 1e-12);
  }
}

TEST(Newton, ConstantCoefficientIsOne) {
  for (int twice = 1; twice <= 9; ++twice) {
    EXPECT_NEAR(newton_series(spin(twice)).coeffs[0], 1.0, 1e-15);
  }
}

TEST(Newton, SpinHalfIsIdentityMinusNumber) {
  const NewtonSeries h = newton_series(spin(1));
  ASSERT_EQ(h.coeffs.size(), 2U);
  EXPECT_NEAR(h.coeffs[1], -1.0, 1e-15);
}

TEST(Newton, ThreeHalvesHitsTheSquareRootsAtTheNodes) {
  const NewtonSeries h = newton_series(spin(3));
  EXPECT_NEAR(h(0), 1.0, 1e-14);
  EXPECT_NEAR(h(1), std::sqrt(2.0 / 3.0), 1e-14);
  EXPECT_NEAR(h(2), std::sqrt(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(h(3), 0.0, 1e-14);
}

TEST(Newton, SquaredPolynomialIsExactOnTheTruncatedSpace) {
  for (int twice = 1; twice <= 9; ++twice) {
    const NewtonSeries h = newton_series(spin(twice));
    for (int n = 0; n <= twice; ++n) {
      EXPECT_NEAR(h(n) * h(n), 1.0 - static_cast<double>(n) / twice, 1e-12) << twice << " " << n;
    }
  }
}

TEST(HpNumber, RawIsDescendingAndCanonicalAscending) {
  const DenseOperator raw = hp_number(spin(3), HpFrame::Raw);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(raw(k, k).real(), 3 - k);
  EXPECT_LT(max_abs(hp_number(spin(1), HpFrame::Raw) -
                    (DenseOperator(2, 2) << 1.0, 0.0, 0.0, 0.0).finished()),
            1e-15);
  EXPECT_LT(max_abs(hp_number(spin(3)) - boson_ops(3).number), 1e-15);
}

TEST(HpNumber, RawEqualsSPlusSz) {
  for (int twice = 1; twice <= 6; ++twice) {
    const SpinOps s = spin_ops(spin(twice));
    EXPECT_LT(max_abs(hp_number(spin(twice), HpFrame::Raw) -
                      (0.5 * twice * oracle::identity(twice + 1) + s.sz)),
              1e-14);
  }
}

TEST(HpCreate, ThreeHalvesRawHasSuperdiagonalRootsThreeTwoOne) {
  const HpCreate bd = hp_create(spin(3));
  EXPECT_NEAR(bd.raw(0, 1).real(), std::sqrt(3.0), 1e-13);
  EXPECT_NEAR(bd.raw(1, 2).real(), std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(bd.raw(2, 3).real(), 1.0, 1e-13);
  EXPECT_LT(max_abs(bd.dense - boson_ops(3).create), 1e-12);
}

TEST(HpCreate, SpinHalfIsProportionalToSigmaPlus) {
  const HpCreate bd = hp_create(spin(1));
  ASSERT_EQ(bd.pauli.size(), 2U);
  // Canonical frame: |1><0| = (X - iY)/2.
  EXPECT_LT(std::abs(bd.pauli.coefficient(PauliString("X")) - Complex{0.5, 0.0}), 1e-14);
  EXPECT_LT(std::abs(bd.pauli.coefficient(PauliString("Y")) - Complex{0.0, -0.5}), 1e-14);
}

TEST(HpCreate, RawMatchesTheLiteralInverseSquareRoot) {
  // b^dag = S+ (S I - S_z)^(-1/2), pseudo-inverse on the vanishing entry.
  for (int twice = 1; twice <= 9; ++twice) {
    const SpinOps s = spin_ops(spin(twice));
    DenseOperator inv = DenseOperator::Zero(twice + 1, twice + 1);
    for (int k = 0; k <= twice; ++k) {
      const double d = 0.5 * twice - s.sz(k, k).real();
      inv(k, k) = d > 0.5 ? 1.0 / std::sqrt(d) : 0.0;
    }
    EXPECT_LT(max_abs(hp_create(spin(twice)).raw - s.s_plus * inv), 1e-12) << twice;
  }
}

TEST(HpCreate, CanonicalDenseMatchesBosonCreationOnTheFockBlock) {
  for (int twice = 1; twice <= 9; ++twice) {
    const HpCreate bd = hp_create(spin(twice));
    const DenseOperator block = bd.dense.topLeftCorner(twice + 1, twice + 1);
    EXPECT_LT(max_abs(block - boson_ops(twice).create), 1e-12) << twice;
    // Padding states are never reached.
    EXPECT_NEAR(bd.dense.norm(), block.norm(), 1e-12);
  }
}

TEST(HpCreate, CreationTimesAnnihilationIsNumberPlusOneOffTheTopState) {
  for (int twice = 1; twice <= 7; ++twice) {
    const HpCreate bd = hp_create(spin(twice));
    const DenseOperator aa = bd.raw.adjoint() * bd.raw;  // b b^dag in raw frame
    const DenseOperator n = hp_number(spin(twice), HpFrame::Raw);
    // b b^dag = n + 1 except on the top state (raw index 0), which b^dag kills.
    for (int k = 1; k <= twice; ++k) EXPECT_NEAR(aa(k, k).real(), n(k, k).real() + 1.0, 1e-12);
    EXPECT_NEAR(aa(0, 0).real(), 0.0, 1e-12);
  }
}

TEST(HpCreate, ComposedPauliPathAgreesWithDecomposition) {
  for (int twice = 1; twice <= 9; ++twice) {
    const PauliSum composed = hp_create_pauli_composed(spin(twice));
    const PauliSum decomposed = hp_create(spin(twice)).pauli;
    EXPECT_LT(max_abs_entry(composed - decomposed), 1e-12) << twice;
  }
}

TEST(Encodings, AllThreeAgreeForOneThreeSevenPhotons) {
  for (int n_max : {1, 3, 7}) {
    const DenseOperator canonical = boson_ops(n_max).create;
    const auto width = register_width(n_max + 1);
    EXPECT_LT(max_abs(unary_block(one_to_one_create(n_max), n_max) - canonical), 1e-12);
    EXPECT_LT(max_abs(matrix_of(binary_create(width)) - canonical), 1e-12);
    EXPECT_LT(max_abs(hp_create(spin(n_max)).dense - canonical), 1e-12);
    EXPECT_LT(max_abs_entry(hp_create(spin(n_max)).pauli - binary_create(width)), 1e-12);
  }
}

TEST(Spin32Pauli, LiteralExpressionsMatchSpinMatrices) {
  const Spin32Pauli p = spin32_pauli();
  const SpinOps s = spin_ops(spin(3));
  EXPECT_LT(max_abs(matrix_of(p.two_sx) - 2.0 * s.sx), 1e-14);
  EXPECT_LT(max_abs(matrix_of(p.two_sy) - 2.0 * s.sy), 1e-14);
  EXPECT_LT(max_abs(matrix_of(p.two_sz) - 2.0 * s.sz), 1e-14);
}

TEST(Spin32Pauli, TwoSxIsSymmetricTridiagonal) {
  const DenseOperator m = matrix_of(spin32_pauli().two_sx);
  EXPECT_NEAR(m(0, 1).real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(m(1, 2).real(), 2.0, 1e-14);
  EXPECT_NEAR(m(2, 3).real(), std::sqrt(3.0), 1e-14);
  EXPECT_LT(max_abs(m - m.transpose()), 1e-15);
  const PauliSum& sx = spin32_pauli().two_sx;
  ASSERT_EQ(sx.size(), 3U);
  EXPECT_NEAR(sx.coefficient(PauliString("IX")).real(), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(sx.coefficient(PauliString("XX")).real(), 1.0, 1e-15);
  EXPECT_NEAR(sx.coefficient(PauliString("YY")).real(), 1.0, 1e-15);
}

TEST(Spin32Pauli, TwoSzIsDiagonalThreeOneMinusOneMinusThree) {
  const DenseOperator m = matrix_of(spin32_pauli().two_sz);
  const double expected[] = {3.0, 1.0, -1.0, -3.0};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(m(k, k).real(), expected[k], 1e-14);
}

TEST(Spin32Pauli, CreationMatchesRawHpAndIsTheXConjugateOfBinary) {
  const Spin32Pauli p = spin32_pauli();
  const DenseOperator m = matrix_of(p.create);
  EXPECT_NEAR(m(0, 1).real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(m(1, 2).real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(m(2, 3).real(), 1.0, 1e-14);
  EXPECT_LT(max_abs(m - hp_create(spin(3)).raw), 1e-12);
  EXPECT_LT(max_abs_entry(p.create.conjugated_by_x_string() - binary_create(2)), 1e-14);
}

TEST(DiagonalPauli, RoundTripsThroughDiagonalValues) {
  const std::vector<double> d = {0.5, -1.0, 2.0, 3.5, 0.0, 1.0, -2.5, 4.0};
  const std::vector<double> back = diagonal_values(diagonal_pauli(d, 3));
  for (std::size_t k = 0; k < d.size(); ++k) EXPECT_NEAR(back[k], d[k], 1e-14);
  EXPECT_THROW(diagonal_values(PauliSum::term("X")), std::invalid_argument);
}

}  // namespace
}  // namespace qedsim
