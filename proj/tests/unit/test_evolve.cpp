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
#include <numeric>
#include <random>

#include "golden_uv.hpp"
#include "oracles.hpp"
#include "qedsim/measure.hpp"
#include "qedsim/evolve.hpp"
#include "qedsim/model.hpp"
#include "qedsim/prep.hpp"

namespace qedsim {
namespace {

using oracle::max_abs;

Statevector mott_state(double ratio, std::size_t L = 2) {
  const CavityParams p = CavityParams::from_detuning_ratio(ratio);
  return initial_state({1, theta_from_detuning(p.g, 1, p.detuning())}, L);
}

PauliSum jch(double ratio, std::size_t L = 2) {
  return build_jch(CavityParams::from_detuning_ratio(ratio), LatticeSpec::chain(L));
}

TEST(PropagationPlan, DefaultsFollowTheTwentyStepGrid) {
  const PropagationPlan plan;
  EXPECT_DOUBLE_EQ(plan.dt(), 0.5);
  EXPECT_DOUBLE_EQ(plan.delta_t(), 0.5);
  const std::vector<double> t = plan.times();
  ASSERT_EQ(t.size(), 21U);
  EXPECT_DOUBLE_EQ(t.front(), 0.0);
  EXPECT_DOUBLE_EQ(t.back(), 10.0);
}

TEST(PropagationPlan, RejectsNonPositiveEntries) {
  PropagationPlan plan;
  plan.n_trotter = 0;
  EXPECT_THROW(plan.validate(), std::invalid_argument);
  plan = PropagationPlan{};
  plan.total_time = -1.0;
  EXPECT_THROW(plan.validate(), std::invalid_argument);
}

TEST(TermOrder, DiagonalFirstPutsIZStringsFirst) {
  const std::vector<PauliTerm> terms = ordered_terms(jch(1.0), TermOrder::DiagonalFirst);
  std::size_t k = 0;
  while (k < terms.size() && terms[k].axes.is_diagonal()) ++k;
  EXPECT_GT(k, 0U);
  for (; k < terms.size(); ++k) EXPECT_FALSE(terms[k].axes.is_diagonal());
  const std::vector<PauliTerm> lex = ordered_terms(jch(1.0), TermOrder::Lexicographic);
  EXPECT_TRUE(std::is_sorted(lex.begin(), lex.end(),
                             [](const PauliTerm& a, const PauliTerm& b) { return a.axes < b.axes; }));
}

TEST(TermOrder, FlipGroupedKeepsEqualMasksContiguous) {
  const std::vector<PauliTerm> terms = ordered_terms(jch(1.0), TermOrder::FlipGrouped);
  ASSERT_EQ(terms.size(), 55U);
  EXPECT_TRUE(terms.front().axes.is_diagonal());
  for (std::size_t k = 1; k < terms.size(); ++k) {
    EXPECT_LE(terms[k - 1].axes.x_mask(), terms[k].axes.x_mask());
    if (terms[k - 1].axes.x_mask() == terms[k].axes.x_mask()) {
      EXPECT_LT(terms[k - 1].axes, terms[k].axes);
    }
  }
}

TEST(TermOrder, FlipGroupsOfCavityHamiltoniansCommuteInternally) {
  for (std::size_t L : {1U, 2U, 3U}) {
    const PauliSum h = jch(0.5, L);
    for (const PauliTerm& a : h.terms()) {
      for (const PauliTerm& b : h.terms()) {
        if (a.axes.x_mask() == b.axes.x_mask()) {
          EXPECT_TRUE(a.axes.commutes_with(b.axes)) << a.axes.str() << " " << b.axes.str();
        }
      }
    }
  }
}

TEST(TermOrder, StepOrderingChangesOnlyTheTrotterError) {
  const PauliSum h = jch(1.0);
  const Statevector psi0 = mott_state(1.0);
  const Statevector exact = ExactPropagator(h).evolve(psi0, 0.5);
  for (TermOrder order : {TermOrder::Lexicographic, TermOrder::DiagonalFirst,
                          TermOrder::FlipGrouped}) {
    Statevector s = psi0;
    apply_trotter_step(s, ordered_terms(h, order), 0.5);
    EXPECT_GT(overlap_probability(s, exact), 0.99);
  }
}

TEST(TrotterStep, SingleTermIsExact) {
  const PauliSum h = PauliSum::term("Z", 0.8);
  const Circuit c = trotter_step_circuit(h, 0.3);
  EXPECT_LT(max_abs(circuit_unitary(c) - oracle::expm_minus_i(matrix_of(h), 0.3)), 1e-14);
}

TEST(TrotterStep, CommutingTermsAreExact) {
  const PauliSum h = PauliSum::term("ZZI", 0.4) + PauliSum::term("XXI", -0.9) +
                     PauliSum::term("IIY", 1.3);
  const Circuit c = trotter_step_circuit(h, 0.7);
  EXPECT_LT(max_abs(circuit_unitary(c) - oracle::expm_minus_i(matrix_of(h), 0.7)), 1e-12);
}

TEST(TrotterStep, TwoCavityStepHasOneGatePerTerm) {
  const Circuit c = trotter_step_circuit(jch(1.0), 0.5);
  EXPECT_EQ(c.size(), 55U);
  for (const Gate& g : c.gates()) EXPECT_EQ(g.kind, GateKind::PauliExp);
}

TEST(TrotterStep, RejectsNonHermitianHamiltonians) {
  EXPECT_THROW(trotter_step_circuit(PauliSum::term("X", Complex(0, 1)), 0.1),
               std::invalid_argument);
}

TEST(TrotterStep, FidelityDeficitAgainstDenseExponentialIsSecondOrder) {
  const PauliSum h = jch(1.0);
  const Statevector psi0 = mott_state(1.0);
  const Eigen::VectorXcd exact_amps = oracle::expm_minus_i(matrix_of(h), 0.5) * psi0.amplitudes();
  const Statevector exact = Statevector::from_amplitudes(6, exact_amps);
  double previous = 1.0;
  for (int n : {1, 2, 4}) {
    Statevector s = psi0;
    const std::vector<PauliTerm> terms = ordered_terms(h, TermOrder::FlipGrouped);
    for (int k = 0; k < n; ++k) apply_trotter_step(s, terms, 0.5 / n);
    const double deficit = 1.0 - overlap_probability(exact, s);
    EXPECT_LT(deficit, previous);
    EXPECT_LT(deficit, 1e-3);
    previous = deficit;
  }
}

TEST(Propagate, ZeroHamiltonianLeavesStateUnchanged) {
  std::mt19937_64 rng(3);
  const Statevector psi0 = Statevector::from_amplitudes(3, oracle::random_state(8, rng));
  const auto states = propagate(psi0, PauliSum(3), PropagationPlan{});
  ASSERT_EQ(states.size(), 21U);
  for (const Statevector& s : states) {
    EXPECT_LT((s.amplitudes() - psi0.amplitudes()).norm(), 1e-15);
  }
}

TEST(Propagate, RejectsWidthMismatch) {
  EXPECT_THROW(propagate(Statevector(3), jch(1.0), PropagationPlan{}), WidthMismatch);
}

TEST(Propagate, AgreesWithExactWhenAllTermsCommute) {
  const PauliSum h = PauliSum::term("ZZII", 0.3) + PauliSum::term("IZIZ", -0.6) +
                     PauliSum::term("XXXX", 0.25) + PauliSum::term("IIII", 2.0);
  std::mt19937_64 rng(4);
  const Statevector psi0 = Statevector::from_amplitudes(4, oracle::random_state(16, rng));
  PropagationPlan plan;
  plan.n_trotter = 3;
  const auto trotter = propagate(psi0, h, plan);
  const auto exact = exact_propagate(psi0, h, plan.times());
  for (std::size_t k = 0; k < trotter.size(); ++k) {
    EXPECT_LT((trotter[k].amplitudes() - exact[k].amplitudes()).norm(), 1e-12) << k;
  }
}

TEST(Propagate, StepHookRunsOncePerTrotterStep) {
  PropagationPlan plan;
  plan.n_time_steps = 4;
  plan.n_trotter = 3;
  int calls = 0;
  propagate(Statevector(1), PauliSum::term("X"), plan, [&](Statevector&) { ++calls; });
  EXPECT_EQ(calls, 12);
}

TEST(Propagate, ConservesExcitationNumberAlongTheTrajectory) {
  const PauliSum n_ex = excitation_ops(2).n_ex;
  for (double ratio : {1e-5, 1e-2, 1.0, 1e2, 1e5}) {
    const auto states = propagate(mott_state(ratio), jch(ratio), PropagationPlan{});
    for (const Statevector& s : states) {
      EXPECT_NEAR(expectation(s, n_ex), 2.0, 1e-8) << ratio;
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    }
  }
}

TEST(Propagate, StringOrderTrotterizationLeaksExcitations) {
  // Interleaving strings of different flip groups breaks conservation at
  // first order; this is what the grouped ordering avoids.
  PropagationPlan plan;
  plan.order = TermOrder::Lexicographic;
  const auto states = propagate(mott_state(1.0), jch(1.0), plan);
  double drift = 0.0;
  for (const Statevector& s : states) {
    drift = std::max(drift, std::abs(expectation(s, excitation_ops(2).n_ex) - 2.0));
  }
  EXPECT_GT(drift, 1e-6);
}

TEST(ExactPropagator, TimeZeroIsIdentityAndUnitaryIsUnitary) {
  const ExactPropagator prop(jch(1.0));
  const DenseOperator u = prop.unitary(3.7);
  EXPECT_LT(max_abs(u * u.adjoint() - DenseOperator::Identity(64, 64)), 1e-10);
  EXPECT_LT(max_abs(prop.unitary(0.0) - DenseOperator::Identity(64, 64)), 1e-12);
}

TEST(ExactPropagator, MatchesPadeExponential) {
  std::mt19937_64 rng(5);
  const DenseOperator m = oracle::random_hermitian(16, rng);
  const ExactPropagator prop(decompose(m, 4));
  EXPECT_LT(max_abs(prop.unitary(1.3) - oracle::expm_minus_i(m, 1.3)), 1e-10);
}

TEST(ExactPropagator, RejectsOversizedOrNonHermitianOperators) {
  EXPECT_THROW(ExactPropagator(PauliSum::identity(kMaxDenseQubits + 1)), std::invalid_argument);
  EXPECT_THROW(ExactPropagator(PauliSum::term("Y", Complex(0, 1))), std::invalid_argument);
}

TEST(ExactPropagator, ResonantCavityRabiOscillatesAtGRootN) {
  CavityParams p;  // omega = omega0: resonance
  p.g = 0.3;
  const PauliSum h = build_jc(p, 3);
  const PauliSum excited = tensor(atom_excited(), PauliSum::identity(2));
  for (std::uint64_t n : {1U, 2U, 3U}) {
    const Statevector psi0 = Statevector::basis(3, 0b100 | (n - 1));  // |e, n-1>
    const ExactPropagator prop(h);
    for (double t : {0.0, 0.7, 2.1, 5.3}) {
      const double expected = std::pow(std::cos(p.g * std::sqrt(double(n)) * t), 2);
      EXPECT_NEAR(expectation(prop.evolve(psi0, t), excited), expected, 1e-10) << n << " " << t;
    }
  }
}

// Error of the final state at t = T against the exact propagator.
double final_state_error(double ratio, int n_trotter) {
  PropagationPlan plan;
  plan.n_trotter = n_trotter;
  const Statevector psi0 = mott_state(ratio);
  const auto trotter = propagate(psi0, jch(ratio), plan);
  const Statevector exact = ExactPropagator(jch(ratio)).evolve(psi0, plan.total_time);
  return (trotter.back().amplitudes() - exact.amplitudes()).norm();
}

TEST(Propagate, FirstOrderTrotterErrorHalvesWithTheStep) {
  for (double ratio : {1e-5, 1.0}) {
    const double ratio_12 = final_state_error(ratio, 1) / final_state_error(ratio, 2);
    const double ratio_24 = final_state_error(ratio, 2) / final_state_error(ratio, 4);
    EXPECT_GE(ratio_12, 1.5) << ratio;
    EXPECT_LE(ratio_12, 2.5) << ratio;
    EXPECT_GE(ratio_24, 1.5) << ratio;
    EXPECT_LE(ratio_24, 2.5) << ratio;
  }
}

TEST(BenchmarkUv, ExactUnitaryMatchesPrintedMatrix) {
  const UvBenchmark b = benchmark_uv(10);
  EXPECT_LT(golden::max_deviation(b.u, golden::kU), 0.0015);
  EXPECT_NEAR(b.u(0, 0).real(), 0.023, 0.0015);
  EXPECT_NEAR(b.u(0, 2).real(), -0.714, 0.0015);
  EXPECT_NEAR(b.u(0, 5).imag(), -0.632, 0.0015);
  EXPECT_NEAR(b.u(3, 3).real(), 0.606, 0.0015);
}

TEST(BenchmarkUv, TenSliceProductMatchesPrintedMatrix) {
  const UvBenchmark b = benchmark_uv(10);
  EXPECT_LT(golden::max_deviation(b.v, golden::kV10), 0.0015);
  EXPECT_NEAR(b.v(2, 0).real(), -0.757, 0.0015);
  EXPECT_NEAR(b.v(0, 2).real(), -0.668, 0.0015);
  EXPECT_GT(b.rel_err, 0.01);
  EXPECT_LE(b.rel_err, 0.15);
}

TEST(BenchmarkUv, RelativeErrorDecreasesWithSlices) {
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {10, 20, 40, 80}) {
    const UvBenchmark b = benchmark_uv(n);
    EXPECT_LT(b.rel_err, previous) << n;
    previous = b.rel_err;
  }
  EXPECT_THROW(benchmark_uv(0), std::invalid_argument);
}

TEST(BenchmarkUv, ExactUnitaryIsTheFrameConjugateOfTheCanonicalOne) {
  // Independent route: Fock-basis b from the oracle, reversed into the
  // descending frame by the X string on the photon qubits.
  const DenseOperator b = oracle::annihilate(3);
  const DenseOperator h = oracle::kron(oracle::pauli('X'), b + b.adjoint());
  const DenseOperator flip = oracle::pauli_string("IXX");
  const DenseOperator expected = flip * oracle::expm_minus_i(h, 1.0) * flip;
  EXPECT_LT(max_abs(benchmark_uv(1).u - expected), 1e-10);
}

TEST(GateCount, SingleQubitCircuitsHaveNoTwoQubitGates) {
  Circuit c(3);
  c.h(0).rx(1, 0.3).t(2);
  const GateCount n = count_two_qubit_gates(c);
  EXPECT_EQ(n.raw, 0U);
  EXPECT_EQ(n.cancelled, 0U);
}

TEST(GateCount, WeightKExponentialUsesTwoKMinusTwo) {
  Circuit c(4);
  c.pauli_exp(PauliString("XYZX"), 0.1);
  EXPECT_EQ(count_two_qubit_gates(c).raw, 6U);
}

TEST(GateCount, AdjacentIdenticalPairsCancel) {
  Circuit c(3);
  c.cnot(0, 1).cnot(0, 1).cnot(1, 2).h(0).cnot(1, 2);
  const GateCount n = count_two_qubit_gates(c);
  EXPECT_EQ(n.raw, 4U);
  EXPECT_EQ(n.cancelled, 2U);
}

TEST(GateCount, TwoCavityStepMatchesSumOverTermWeights) {
  const PauliSum h = jch(1.0);
  std::size_t expected = 0;
  for (const PauliTerm& t : h.terms()) {
    const std::size_t w = t.axes.weight();
    if (w > 0) expected += 2 * (w - 1);
  }
  const GateCount n = count_two_qubit_gates(trotter_step_circuit(h, 0.5));
  EXPECT_EQ(n.raw, expected);
  EXPECT_EQ(n.raw, 216U);
  EXPECT_LE(n.cancelled, n.raw);
}

TEST(GateCount, StepCountGrowsLinearlyWithCavities) {
  std::vector<double> xs, ys;
  for (std::size_t L = 2; L <= 10; ++L) {
    const PauliSum h = jch(1.0, L);
    xs.push_back(double(L));
    ys.push_back(double(count_two_qubit_gates(trotter_step_circuit(h, 0.5)).raw));
  }
  const double n = double(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  EXPECT_GE(sxy * sxy / (sxx * syy), 0.99);
  EXPECT_GT(sxy, 0.0);
}

}  // namespace
}  // namespace qedsim
