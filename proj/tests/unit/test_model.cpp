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
#include "qedsim/measure.hpp"
#include "qedsim/model.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {
namespace {

using oracle::max_abs;

CavityParams table_params(double ratio) { return CavityParams::from_detuning_ratio(ratio); }

double hermiticity_defect(const PauliSum& h) {
  const DenseOperator m = matrix_of(h);
  return max_abs(m - m.adjoint());
}

TEST(CavityParams, DetuningIsTheMagnitudeOfTheGap) {
  const CavityParams p = CavityParams::from_detuning_ratio(1e5);
  EXPECT_NEAR(p.omega0, 1.0 + 1e4, 1e-9);
  EXPECT_NEAR(p.detuning(), 1e4, 1e-9);
  CavityParams below = p;
  below.omega0 = 0.5;
  EXPECT_NEAR(below.detuning(), 0.5, 1e-15);
}

TEST(CavityParams, ValidationRejectsUnphysicalValues) {
  CavityParams p;
  p.J = -0.1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = CavityParams{};
  p.omega = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(LatticeSpec, ChainIsSymmetricWithEmptyDiagonal) {
  const LatticeSpec l = LatticeSpec::chain(4);
  EXPECT_NO_THROW(l.validate());
  EXPECT_TRUE(l.connected(1, 2));
  EXPECT_TRUE(l.connected(2, 1));
  EXPECT_FALSE(l.connected(0, 2));
  EXPECT_EQ(l.n_qubits(), 12U);
}

TEST(LatticeSpec, RejectsAsymmetricOrOverflowingLattices) {
  LatticeSpec l = LatticeSpec::chain(2);
  l.adjacency[1] = 0;
  EXPECT_THROW(l.validate(), std::invalid_argument);
  EXPECT_THROW(LatticeSpec::chain(21).validate(), std::invalid_argument);
}

TEST(PhotonRegister, WidthFollowsTruncation) {
  EXPECT_EQ(photon_qubits_for(3), 2U);
  EXPECT_EQ(photon_qubits_for(7), 3U);
  EXPECT_THROW(photon_qubits_for(4), std::invalid_argument);
  EXPECT_LT(max_abs(matrix_of(photon_number(2)) - boson_ops(3).number), 1e-15);
}

TEST(Rabi, WithoutCouplingAtomAndFieldCommute) {
  CavityParams p = table_params(1.0);
  p.g = 0.0;
  const PauliSum h = build_rabi(p, 3);
  const PauliSum atom = tensor(atom_excited(), PauliSum::identity(2)) * Complex{p.omega0, 0.0};
  const PauliSum field = h - atom;
  EXPECT_LT(commutator_norm(atom, field), 1e-14);
}

TEST(Rabi, InteractionIsSigmaXTimesQuadrature) {
  CavityParams p;
  p.omega = 1.0;
  p.omega0 = 0.0;
  p.g = 1.0;
  const PauliSum h = build_rabi(p, 3) - tensor(PauliSum::identity(1), photon_number(2));
  const BosonOps b = boson_ops(3);
  EXPECT_LT(max_abs(matrix_of(h) - oracle::kron(oracle::pauli('X'), b.create + b.annihilate)),
            1e-14);
}

TEST(Rabi, EqualsDenseSumOfItsThreeParts) {
  const CavityParams p = table_params(3.0);
  const BosonOps b = boson_ops(3);
  const DenseOperator expected =
      p.omega * oracle::kron(oracle::identity(2), b.number) +
      p.omega0 * oracle::kron(oracle::atom_raise() * oracle::atom_raise().adjoint(), oracle::identity(4)) +
      p.g * oracle::kron(oracle::pauli('X'), b.create + b.annihilate);
  EXPECT_LT(max_abs(matrix_of(build_rabi(p, 3)) - expected), 1e-13);
  EXPECT_LT(hermiticity_defect(build_rabi(p, 3)), 1e-14);
}

TEST(Rabi, RejectsUnsupportedTruncation) {
  EXPECT_THROW(build_rabi(table_params(1.0), 2), std::invalid_argument);
}

TEST(JaynesCummings, AtomicTermUsesTheLiteralGapPrefactor) {
  // (omega0/4) s+s- with s+- = X +- iY is (omega0/2)(I - Z) on the atom.
  CavityParams p;
  p.omega = 1.0;
  p.omega0 = 3.0;
  p.g = 0.0;
  const PauliSum h = build_jc(p, 3);
  EXPECT_NEAR(h.coefficient(PauliString("ZII")).real(), -1.5, 1e-15);
}

TEST(JaynesCummings, ExcitedVacuumIsAnEigenstateWithoutCoupling) {
  CavityParams p = table_params(2.0);
  p.g = 0.0;
  const Statevector e0 = Statevector::basis(3, 0b100);
  const Statevector he = apply_sum(e0, build_jc(p, 3));
  EXPECT_LT((he.amplitudes() - p.omega0 * e0.amplitudes()).norm(), 1e-14);
}

TEST(JaynesCummings, MatchesBlockConstructionFromFockAndSpinMatrices) {
  const CavityParams p = table_params(0.7);
  EXPECT_LT(max_abs(matrix_of(build_jc(p, 3)) - oracle::jch_dense(p.omega, p.omega0, p.g, p.J, 1)),
            1e-13);
}

TEST(JaynesCummings, ConservesThePolaritonNumber) {
  const PauliSum h = build_jc(table_params(1.0), 3);
  const PauliSum n = excitation_ops(1).n_ex;
  EXPECT_LT(commutator_norm(h, n), 1e-13);
}

TEST(JaynesCummings, RawFrameConstructionConjugatesToCanonical) {
  const CavityParams p = table_params(2.5);
  const PauliSum raw = build_jc_raw_frame(p);
  EXPECT_LT(max_abs_entry(raw.conjugated_by_x_string() - build_jc(p, 3)), 1e-13);
}

TEST(JaynesCummingsHubbard, TwoCavitiesHaveFiftyFiveTermsOfWeightAtMostFour) {
  const PauliSum h = build_jch(table_params(1e-5), LatticeSpec::chain(2));
  EXPECT_EQ(h.size(), 55U);
  EXPECT_EQ(h.max_weight(), 4U);
  EXPECT_TRUE(h.is_hermitian());
}

TEST(JaynesCummingsHubbard, MatchesDenseOracle) {
  for (double ratio : {1e-5, 1.0, 1e5}) {
    const CavityParams p = table_params(ratio);
    const DenseOperator expected = oracle::jch_dense(p.omega, p.omega0, p.g, p.J, 2);
    EXPECT_LT(max_abs(matrix_of(build_jch(p, LatticeSpec::chain(2))) - expected),
              1e-12 * std::max(1.0, p.omega0));
  }
}

TEST(JaynesCummingsHubbard, WithoutHoppingSplitsIntoCommutingCavities) {
  CavityParams p = table_params(1.0);
  p.J = 0.0;
  const PauliSum h = build_jch(p, LatticeSpec::chain(2));
  const PauliSum h0 = build_jc(p, 3).embedded(0, 6);
  const PauliSum h1 = build_jc(p, 3).embedded(3, 6);
  EXPECT_LT(max_abs_entry(h - h0 - h1), 1e-14);
  EXPECT_LT(commutator_norm(h0, h1), 1e-14);
}

TEST(JaynesCummingsHubbard, CommutesWithTotalExcitationNumber) {
  const PauliSum h = build_jch(table_params(1e-5), LatticeSpec::chain(2));
  EXPECT_LT(commutator_norm(h, excitation_ops(2).n_ex), 1e-10);
}

TEST(JaynesCummingsHubbard, OnlyAtomicGapCoefficientsDependOnDetuning) {
  const PauliSum a = build_jch(table_params(1e-5), LatticeSpec::chain(2));
  const PauliSum b = build_jch(table_params(1e3), LatticeSpec::chain(2));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a.terms()[k].axes, b.terms()[k].axes);
    const auto axes = std::string(a.terms()[k].axes.str());
    const bool gap_term = axes == "IIIIII" || axes == "ZIIIII" || axes == "IIIZII";
    if (!gap_term) EXPECT_LT(std::abs(a.terms()[k].coeff - b.terms()[k].coeff), 1e-12) << axes;
  }
}

TEST(JaynesCummingsHubbard, ThreeCavityChainIsHermitian) {
  const PauliSum h = build_jch(table_params(1.0), LatticeSpec::chain(3));
  EXPECT_LT(hermiticity_defect(h), 1e-12);
  EXPECT_LT(commutator_norm(h, excitation_ops(3).n_ex), 1e-10);
}

}  // namespace
}  // namespace qedsim
