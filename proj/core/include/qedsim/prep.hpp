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

#include <array>

#include "qedsim/circuit.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {

/**
 * Mixing angle of the lower polariton |n,-> in one cavity:
 * tan(2 theta) = 2 g sqrt(n) / Delta, theta in [0, pi/4]. Delta = 0 gives
 * the equal-weight limit pi/4 and Delta -> infinity gives 0. Throws
 * std::invalid_argument for negative or non-finite Delta, negative g, or
 * n < 1.
 */
double theta_from_detuning(double g, int n, double delta);

/** Per-cavity initial condition. */
struct CavityInit {
  int n = 1;           ///< excitations per cavity
  double theta = 0.0;  ///< mixing angle
};

/**
 * Amplitudes over the 3-qubit cavity basis |atom, photon MSB, photon LSB>:
 * cos(theta) on |g, n> and -sin(theta) on |e, n-1>; all others zero. For
 * n = 1 these are |001> and |100>. Throws std::invalid_argument when n is
 * outside [1, 3].
 */
std::array<Complex, 8> cavity_state_amplitudes(const CavityInit& init);

/** Tensor product of L identical cavity states (direct amplitude injection). */
Statevector initial_state(const CavityInit& init, std::size_t L);

/**
 * Preparation circuit on 3L qubits for n = 1. Per cavity (atom q0, photon
 * LSB q2): RY(-2 theta) on q0 gives cos|0> - sin|1>, X on q2 moves the
 * photon in, and CNOT(q0 -> q2) removes it again when the atom is excited,
 * i.e. a Givens rotation between |001> and |100>. Sub-circuits are
 * identical across cavities.
 */
Circuit init_circuit(double theta, std::size_t L);

}  // namespace qedsim
