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

#include <cstddef>
#include <vector>

#include "qedsim/pauli.hpp"

namespace qedsim {

/**
 * Single-cavity parameters in atomic units. Detuning is the magnitude
 * |omega0 - omega|; sweeps set omega0 = omega + (Delta/g) * g.
 */
struct CavityParams {
  double omega = 1.0;   ///< field frequency
  double omega0 = 1.0;  ///< atomic gap
  double g = 0.1;       ///< atom-field coupling
  double J = 0.1;       ///< inter-cavity hopping

  double detuning() const;

  /** omega0 = omega + ratio * g. */
  static CavityParams from_detuning_ratio(double ratio, double omega = 1.0,
                                          double g = 0.1, double J = 0.1);

  /** Throws std::invalid_argument when omega <= 0 or g, J < 0. */
  void validate() const;
};

/**
 * Cavity graph. Cavity i occupies qubits [stride*i, stride*(i+1)) with the
 * atom first and the photon register after it, most significant bit first;
 * stride = 1 + photon_qubits.
 */
struct LatticeSpec {
  std::size_t L = 2;
  /** Symmetric 0/1 adjacency; row-major L x L. */
  std::vector<int> adjacency;
  std::size_t photon_qubits = 2;

  /** Open chain 0-1-...-(L-1). */
  static LatticeSpec chain(std::size_t L, std::size_t photon_qubits = 2);

  std::size_t stride() const { return 1 + photon_qubits; }
  std::size_t n_qubits() const { return L * stride(); }
  std::size_t atom_qubit(std::size_t cavity) const { return cavity * stride(); }
  std::size_t photon_offset(std::size_t cavity) const { return cavity * stride() + 1; }
  bool connected(std::size_t i, std::size_t j) const;

  /** Throws std::invalid_argument for asymmetric or self-coupled adjacency
   *  and for registers wider than the bitmask limit. */
  void validate() const;
};

/** Photon-number truncation held by a register of `photon_qubits` qubits. */
int photon_n_max(std::size_t photon_qubits);

/** Photon qubits needed for truncation n_max; n_max must be 2^k - 1. */
std::size_t photon_qubits_for(int n_max);

// -- Canonical-frame single-subsystem pieces ------------------------------------

/** |e><e| = (I - Z)/2 on one qubit; |1> is the excited atom. */
PauliSum atom_excited();
/** |e><g| = (X - iY)/2. */
PauliSum atom_raise();
/** |g><e| = (X + iY)/2. */
PauliSum atom_lower();
/** b^dag on a binary photon register (ascending Fock order). */
PauliSum photon_create(std::size_t photon_qubits);
/** b on a binary photon register. */
PauliSum photon_annihilate(std::size_t photon_qubits);
/** b^dag b = sum_k 2^(w-1-k) (I - Z_k)/2. */
PauliSum photon_number(std::size_t photon_qubits);

// -- Hamiltonians --------------------------------------------------------------

/**
 * omega b^dag b + (omega0/4) s+s- + g sx (b + b^dag), with s+- = X +- iY so
 * the atomic term is omega0 |e><e|. Atom on qubit 0, photons after it.
 */
PauliSum build_rabi(const CavityParams& p, int n_max = 3);

/** omega b^dag b + (omega0/4) s+s- + (g/2)(s+ b + s- b^dag). */
PauliSum build_jc(const CavityParams& p, int n_max = 3);

/**
 * sum_i H_JC,i - J sum_{i<j} A_ij (b_i^dag b_j + b_i b_j^dag).
 * For L = 2 with two photon qubits per cavity this has 55 Pauli terms.
 */
PauliSum build_jch(const CavityParams& p, const LatticeSpec& lattice);

/**
 * The JC Hamiltonian written in the raw frame: atom ladder s+- = X +- iY
 * taken literally (excited = |0>) and photon operators from the spin-3/2
 * inverse Holstein-Primakoff realization (descending Fock order). Its
 * conjugation by the X string equals build_jc(p, 3).
 */
PauliSum build_jc_raw_frame(const CavityParams& p);

}  // namespace qedsim
