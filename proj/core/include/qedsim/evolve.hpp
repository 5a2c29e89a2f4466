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


#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "qedsim/circuit.hpp"
#include "qedsim/pauli.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {

/** Order of the exponentials inside one Trotter step. */
enum class TermOrder : std::uint8_t {
  /** Canonical (lexicographic) PauliSum order. */
  Lexicographic,
  /**
   * I/Z-only strings first, then the remaining strings, each block in
   * lexicographic order. Keeps the large diagonal energies together instead
   * of interleaving them with the hopping strings.
   */
  DiagonalFirst,
  /**
   * Strings grouped by X-mask (the set of flipped qubits), groups in
   * ascending mask order, lexicographic inside a group; the diagonal group
   * (mask 0) comes first. The strings sharing a mask form one block of H
   * that couples |c> only to |c ^ mask>, so every conserved diagonal
   * quantity of H commutes with each block. When the strings inside each
   * block also commute with one another (true for the cavity Hamiltonians
   * built here) a Trotter step conserves such quantities exactly. The
   * default.
   */
  FlipGrouped,
};

/**
 * Time grid: snapshots at t_m = m dt for m = 0..n_time_steps, with
 * dt = total_time / n_time_steps and n_trotter first-order Trotter steps of
 * length delta_t = dt / n_trotter between snapshots.
 */
struct PropagationPlan {
  double total_time = 10.0;
  int n_time_steps = 20;
  int n_trotter = 1;
  TermOrder order = TermOrder::FlipGrouped;

  double dt() const { return total_time / n_time_steps; }
  double delta_t() const { return dt() / n_trotter; }
  std::vector<double> times() const;
  /** Throws std::invalid_argument for non-positive entries. */
  void validate() const;
};

/** Terms of `h` arranged in the given order. */
std::vector<PauliTerm> ordered_terms(const PauliSum& h, TermOrder order);

/**
 * One first-order Trotter step: a PauliExp gate exp(-i C_l delta_t P_l) per
 * term, identity included, in the given order. Throws std::invalid_argument
 * for non-Hermitian `h`.
 */
Circuit trotter_step_circuit(const PauliSum& h, double delta_t,
                             TermOrder order = TermOrder::FlipGrouped);

/** Applies one Trotter step to `state` directly on amplitudes. */
void apply_trotter_step(Statevector& state, const std::vector<PauliTerm>& terms,
                        double delta_t);

/** Called after every Trotter step, e.g. to inject noise. */
using StepHook = std::function<void(Statevector&)>;

/**
 * Trotterized trajectory: element m is the state after n_trotter * m steps,
 * m = 0..n_time_steps. Throws NumericalError when the norm drifts by more
 * than 1e-8.
 */
std::vector<Statevector> propagate(const Statevector& psi0, const PauliSum& h,
                                   const PropagationPlan& plan,
                                   const StepHook& after_step = {});

/**
 * exp(-i H t) through the eigendecomposition of the dense Hermitian matrix.
 * The eigenbasis is computed once and reused for every time.
 */
class ExactPropagator {
 public:
  /** Throws std::invalid_argument beyond kMaxDenseQubits or for
   *  non-Hermitian `h`. */
  explicit ExactPropagator(const PauliSum& h);

  std::size_t n_qubits() const { return n_qubits_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  Statevector evolve(const Statevector& psi0, double t) const;
  DenseOperator unitary(double t) const;

 private:
  std::size_t n_qubits_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/** exp(-i H t) psi0 for every t in `times`. */
std::vector<Statevector> exact_propagate(const Statevector& psi0, const PauliSum& h,
                                         const std::vector<double>& times);

/** Exact vs Trotterized evolution of the spin-boson interaction. */
struct UvBenchmark {
  DenseOperator u;
  DenseOperator v;
  double rel_err = 0.0;
};

/**
 * Interaction H = sx (x) (b + b^dag) on 3 qubits (atom, then a spin-3/2 HP
 * photon register), in the raw HP frame (descending number order), at unit
 * time and coupling:
 *   U = exp(-i H),
 *   V = (exp(-i B / N) exp(-i A / N))^N,
 * where A holds the strings whose first photon qubit is I or Z (XIX, XZX)
 * and B the rest (XXX, XYY); each group commutes internally.
 * rel_err = max |V - U| / max |U|.
 */
UvBenchmark benchmark_uv(int n_trotter);

/** CNOT totals of a lowered circuit. */
struct GateCount {
  std::size_t raw = 0;        ///< every CNOT
  std::size_t cancelled = 0;  ///< after removing adjacent identical CNOT pairs
};

/**
 * Lowers PauliExp gates, then counts CNOTs before and after cancelling
 * adjacent identical pairs with a stack pass.
 */
GateCount count_two_qubit_gates(const Circuit& circuit);

}  // namespace qedsim
