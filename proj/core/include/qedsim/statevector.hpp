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

#include "qedsim/pauli.hpp"

namespace qedsim {

/**
 * Dense amplitude vector over 2^n basis states. Qubit 0 is the most
 * significant bit of the basis index, so |100> on 3 qubits is index 4.
 */
class Statevector {
 public:
  /** |0...0> on `n_qubits` qubits. */
  explicit Statevector(std::size_t n_qubits = 0);

  /** Computational basis state |index>. */
  static Statevector basis(std::size_t n_qubits, std::uint64_t index);

  /**
   * Adopts `amplitudes`, whose length must be 2^n_qubits. Throws
   * NumericalError when the norm differs from 1 by more than `tol`.
   */
  static Statevector from_amplitudes(std::size_t n_qubits, Eigen::VectorXcd amplitudes,
                                     double tol = 1e-10);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  Complex operator[](std::uint64_t index) const {
    return amps_[static_cast<Eigen::Index>(index)];
  }

  double norm() const { return amps_.norm(); }
  /** Probability of each basis state. */
  Eigen::VectorXd probabilities() const { return amps_.cwiseAbs2(); }

  /** Tensor product this (x) other, this on the leading qubits. */
  Statevector tensor(const Statevector& other) const;

 private:
  std::size_t n_qubits_ = 0;
  Eigen::VectorXcd amps_;
};

/** <a|b>. */
Complex inner_product(const Statevector& a, const Statevector& b);

/** |<a|b>|^2. */
double overlap_probability(const Statevector& a, const Statevector& b);

/** state <- P state for a single Pauli string (coefficient ignored). */
void apply_pauli(Statevector& state, const PauliString& p);

/**
 * state <- exp(-i theta P) state = cos(theta) state - i sin(theta) P state,
 * updating amplitudes pairwise. Throws WidthMismatch on unequal widths.
 */
void apply_pauli_exp(Statevector& state, const PauliString& p, double theta);

/** state <- op state for a general Pauli sum (not necessarily unitary). */
Statevector apply_sum(const Statevector& state, const PauliSum& op);

/**
 * <psi|op|psi> for Hermitian `op`. Throws std::invalid_argument for
 * non-Hermitian sums and NumericalError if the imaginary part exceeds
 * 1e-10 * max(1, sum of |coefficients|).
 */
double expectation(const Statevector& state, const PauliSum& op);

}  // namespace qedsim
