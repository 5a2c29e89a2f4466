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

#include "qedsim/evolve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "qedsim/bosonmap.hpp"

namespace qedsim {

namespace {

constexpr double kNormTolerance = 1e-8;

void check_norm(const Statevector& state, int step) {
  const double drift = std::abs(state.norm() - 1.0);
  if (!(drift <= kNormTolerance)) {
    throw NumericalError("state norm drifted by " + std::to_string(drift) + " at time step " +
                         std::to_string(step));
  }
}

void check_hermitian(const PauliSum& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("Hamiltonian is not Hermitian");
}

}  // namespace

std::vector<double> PropagationPlan::times() const {
  std::vector<double> t(static_cast<std::size_t>(n_time_steps) + 1);
  for (int m = 0; m <= n_time_steps; ++m) t[static_cast<std::size_t>(m)] = m * dt();
  return t;
}

void PropagationPlan::validate() const {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw std::invalid_argument("total_time must be positive");
  }
  if (n_time_steps < 1) throw std::invalid_argument("n_time_steps must be at least 1");
  if (n_trotter < 1) throw std::invalid_argument("n_trotter must be at least 1");
}

std::vector<PauliTerm> ordered_terms(const PauliSum& h, TermOrder order) {
  std::vector<PauliTerm> out(h.terms().begin(), h.terms().end());
  if (order == TermOrder::DiagonalFirst) {
    std::stable_partition(out.begin(), out.end(),
                          [](const PauliTerm& t) { return t.axes.is_diagonal(); });
  } else if (order == TermOrder::FlipGrouped) {
    std::stable_sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
      return a.axes.x_mask() < b.axes.x_mask();
    });
  }
  return out;
}

Circuit trotter_step_circuit(const PauliSum& h, double delta_t, TermOrder order) {
  check_hermitian(h);
  Circuit c(h.n_qubits());
  for (const auto& t : ordered_terms(h, order)) c.pauli_exp(t.axes, t.coeff.real() * delta_t);
  return c;
}

void apply_trotter_step(Statevector& state, const std::vector<PauliTerm>& terms,
                        double delta_t) {
  for (const auto& t : terms) apply_pauli_exp(state, t.axes, t.coeff.real() * delta_t);
}

std::vector<Statevector> propagate(const Statevector& psi0, const PauliSum& h,
                                   const PropagationPlan& plan, const StepHook& after_step) {
  plan.validate();
  check_hermitian(h);
  if (psi0.n_qubits() != h.n_qubits()) throw WidthMismatch("state and Hamiltonian widths differ");
  const std::vector<PauliTerm> terms = ordered_terms(h, plan.order);
  const double delta_t = plan.delta_t();
  std::vector<Statevector> out;
  out.reserve(static_cast<std::size_t>(plan.n_time_steps) + 1);
  Statevector state = psi0;
  out.push_back(state);
  for (int m = 1; m <= plan.n_time_steps; ++m) {
    for (int k = 0; k < plan.n_trotter; ++k) {
      apply_trotter_step(state, terms, delta_t);
      if (after_step) after_step(state);
    }
    check_norm(state, m);
    out.push_back(state);
  }
  return out;
}

ExactPropagator::ExactPropagator(const PauliSum& h) : n_qubits_(h.n_qubits()) {
  if (n_qubits_ > kMaxDenseQubits) {
    throw std::invalid_argument("exact propagation limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  check_hermitian(h);
  const DenseOperator m = matrix_of(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Statevector ExactPropagator::evolve(const Statevector& psi0, double t) const {
  if (psi0.n_qubits() != n_qubits_) throw WidthMismatch("state and Hamiltonian widths differ");
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi0.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] *= std::polar(1.0, -eigenvalues_[k] * t);
  }
  Statevector out = psi0;
  out.amplitudes() = eigenvectors_ * coeffs;
  check_norm(out, 0);
  return out;
}

DenseOperator ExactPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -eigenvalues_[k] * t);
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

std::vector<Statevector> exact_propagate(const Statevector& psi0, const PauliSum& h,
                                         const std::vector<double>& times) {
  const ExactPropagator prop(h);
  std::vector<Statevector> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(prop.evolve(psi0, t));
  return out;
}

UvBenchmark benchmark_uv(int n_trotter) {
  if (n_trotter < 1) throw std::invalid_argument("n_trotter must be at least 1");
  const Spin32Pauli spin = spin32_pauli();
  const PauliSum h = tensor(PauliSum::term("X"), spin.create + spin.create.adjoint());

  UvBenchmark out;
  out.u = ExactPropagator(h).unitary(1.0);

  // One slice: group A (first photon qubit I or Z) first, then group B.
  Circuit slice(h.n_qubits());
  const double step = 1.0 / n_trotter;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& t : h.terms()) {
      const Pauli first_photon = t.axes[1];
      const bool group_a = first_photon == Pauli::I || first_photon == Pauli::Z;
      if (group_a == (pass == 0)) slice.pauli_exp(t.axes, t.coeff.real() * step);
    }
  }
  const DenseOperator m = circuit_unitary(slice);
  out.v = DenseOperator::Identity(m.rows(), m.cols());
  for (int k = 0; k < n_trotter; ++k) out.v = m * out.v;
  out.rel_err = (out.v - out.u).cwiseAbs().maxCoeff() / out.u.cwiseAbs().maxCoeff();
  return out;
}

GateCount count_two_qubit_gates(const Circuit& circuit) {
  const Circuit low = circuit.lowered();
  GateCount count;
  std::vector<const Gate*> stack;
  stack.reserve(low.size());
  for (const Gate& g : low.gates()) {
    if (g.kind == GateKind::CNOT) {
      ++count.raw;
      if (!stack.empty() && *stack.back() == g) {
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(&g);
  }
  for (const Gate* g : stack) {
    if (g->kind == GateKind::CNOT) ++count.cancelled;
  }
  return count;
}

}  // namespace qedsim
