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

#include "qedsim/prep.hpp"

#include <cmath>
#include <stdexcept>

namespace qedsim {

namespace {
constexpr std::size_t kCavityQubits = 3;
}  // namespace

double theta_from_detuning(double g, int n, double delta) {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw std::invalid_argument("detuning must be finite and non-negative");
  }
  if (!std::isfinite(g) || g < 0.0) throw std::invalid_argument("g must be non-negative");
  if (n < 1) throw std::invalid_argument("excitation number must be at least 1");
  return 0.5 * std::atan2(2.0 * g * std::sqrt(static_cast<double>(n)), delta);
}

std::array<Complex, 8> cavity_state_amplitudes(const CavityInit& init) {
  if (init.n < 1 || init.n > 3) {
    throw std::invalid_argument("excitation number must lie in [1, 3] for a 2-qubit photon register");
  }
  std::array<Complex, 8> amps{};
  const auto ground_n = static_cast<std::size_t>(init.n);            // |0, n>
  const auto excited_n1 = static_cast<std::size_t>(4 + init.n - 1);  // |1, n-1>
  amps[ground_n] = std::cos(init.theta);
  amps[excited_n1] = -std::sin(init.theta);
  return amps;
}

Statevector initial_state(const CavityInit& init, std::size_t L) {
  if (L < 1) throw std::invalid_argument("need at least one cavity");
  const auto amps = cavity_state_amplitudes(init);
  Eigen::VectorXcd cavity(8);
  for (Eigen::Index k = 0; k < 8; ++k) cavity[k] = amps[static_cast<std::size_t>(k)];
  const Statevector one = Statevector::from_amplitudes(kCavityQubits, cavity);
  Statevector out = one;
  for (std::size_t i = 1; i < L; ++i) out = out.tensor(one);
  return out;
}

Circuit init_circuit(double theta, std::size_t L) {
  if (L < 1) throw std::invalid_argument("need at least one cavity");
  Circuit out(kCavityQubits * L);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t atom = kCavityQubits * i;
    const std::size_t lsb = atom + 2;
    out.ry(atom, -2.0 * theta);
    out.x(lsb);
    out.cnot(atom, lsb);
  }
  return out;
}

}  // namespace qedsim
