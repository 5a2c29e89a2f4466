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

#include "qedsim/model.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qedsim/bosonmap.hpp"

namespace qedsim {

namespace {

PauliSum cavity_operator(const PauliSum& atom, const PauliSum& photon) {
  return tensor(atom, photon);
}

PauliSum jc_cavity(const CavityParams& p, std::size_t photon_qubits) {
  const PauliSum photon_id = PauliSum::identity(photon_qubits);
  const PauliSum atom_id = PauliSum::identity(1);
  const PauliSum b_dag = photon_create(photon_qubits);
  const PauliSum b = photon_annihilate(photon_qubits);
  PauliSum h = cavity_operator(atom_id, photon_number(photon_qubits)) * Complex{p.omega, 0.0};
  // (omega0/4) s+s- with s+- = X +- iY equals omega0 |e><e|.
  h += cavity_operator(atom_excited(), photon_id) * Complex{p.omega0, 0.0};
  // (g/2)(s+ b + s- b^dag) equals g(|e><g| b + |g><e| b^dag).
  h += (cavity_operator(atom_raise(), b) + cavity_operator(atom_lower(), b_dag)) *
       Complex{p.g, 0.0};
  return h;
}

}  // namespace

double CavityParams::detuning() const { return std::abs(omega0 - omega); }

CavityParams CavityParams::from_detuning_ratio(double ratio, double omega, double g,
                                               double J) {
  CavityParams p;
  p.omega = omega;
  p.g = g;
  p.J = J;
  p.omega0 = omega + ratio * g;
  return p;
}

void CavityParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be positive");
  if (!std::isfinite(omega0)) throw std::invalid_argument("omega0 must be finite");
  if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("g must be non-negative");
  if (!(J >= 0.0) || !std::isfinite(J)) throw std::invalid_argument("J must be non-negative");
}

LatticeSpec LatticeSpec::chain(std::size_t L, std::size_t photon_qubits) {
  if (L < 1) throw std::invalid_argument("lattice needs at least one cavity");
  LatticeSpec spec;
  spec.L = L;
  spec.photon_qubits = photon_qubits;
  spec.adjacency.assign(L * L, 0);
  for (std::size_t i = 0; i + 1 < L; ++i) {
    spec.adjacency[i * L + i + 1] = 1;
    spec.adjacency[(i + 1) * L + i] = 1;
  }
  return spec;
}

bool LatticeSpec::connected(std::size_t i, std::size_t j) const {
  return adjacency.at(i * L + j) != 0;
}

void LatticeSpec::validate() const {
  if (L < 1) throw std::invalid_argument("lattice needs at least one cavity");
  if (photon_qubits < 1) throw std::invalid_argument("photon register needs at least one qubit");
  if (adjacency.size() != L * L) throw std::invalid_argument("adjacency must be L x L");
  for (std::size_t i = 0; i < L; ++i) {
    if (adjacency[i * L + i] != 0) throw std::invalid_argument("adjacency diagonal must be zero");
    for (std::size_t j = 0; j < L; ++j) {
      const int a = adjacency[i * L + j];
      if (a != 0 && a != 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
      if (a != adjacency[j * L + i]) throw std::invalid_argument("adjacency must be symmetric");
    }
  }
  if (n_qubits() > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(n_qubits()) +
                                " qubits overflows the supported width");
  }
}

int photon_n_max(std::size_t photon_qubits) {
  if (photon_qubits < 1 || photon_qubits > 30) throw std::invalid_argument("photon register width out of range");
  return (1 << photon_qubits) - 1;
}

std::size_t photon_qubits_for(int n_max) {
  if (n_max < 1 || !std::has_single_bit(static_cast<unsigned>(n_max) + 1U)) {
    throw std::invalid_argument("n_max must be 2^k - 1 with k >= 1, got " + std::to_string(n_max));
  }
  return static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(n_max) + 1U));
}

PauliSum atom_excited() {
  return PauliSum::term("I", 0.5) + PauliSum::term("Z", -0.5);
}

PauliSum atom_raise() {
  return PauliSum::term("X", 0.5) + PauliSum::term("Y", Complex{0.0, -0.5});
}

PauliSum atom_lower() {
  return PauliSum::term("X", 0.5) + PauliSum::term("Y", Complex{0.0, 0.5});
}

PauliSum photon_create(std::size_t photon_qubits) { return binary_create(photon_qubits); }

PauliSum photon_annihilate(std::size_t photon_qubits) {
  return binary_create(photon_qubits).adjoint();
}

PauliSum photon_number(std::size_t photon_qubits) {
  PauliSum n(photon_qubits);
  for (std::size_t k = 0; k < photon_qubits; ++k) {
    const double weight = std::ldexp(1.0, static_cast<int>(photon_qubits - 1 - k));
    n += (PauliSum::identity(photon_qubits, 0.5 * weight) +
          PauliSum(photon_qubits, {{PauliString::single(photon_qubits, k, Pauli::Z), -0.5 * weight}}));
  }
  return n;
}

PauliSum build_rabi(const CavityParams& p, int n_max) {
  p.validate();
  const std::size_t w = photon_qubits_for(n_max);
  const PauliSum photon_id = PauliSum::identity(w);
  PauliSum h = tensor(PauliSum::identity(1), photon_number(w)) * Complex{p.omega, 0.0};
  h += tensor(atom_excited(), photon_id) * Complex{p.omega0, 0.0};
  h += tensor(PauliSum::term("X"), photon_create(w) + photon_annihilate(w)) * Complex{p.g, 0.0};
  return h;
}

PauliSum build_jc(const CavityParams& p, int n_max) {
  p.validate();
  return jc_cavity(p, photon_qubits_for(n_max));
}

PauliSum build_jch(const CavityParams& p, const LatticeSpec& lattice) {
  p.validate();
  lattice.validate();
  const std::size_t n = lattice.n_qubits();
  const std::size_t w = lattice.photon_qubits;
  const PauliSum cavity = jc_cavity(p, w);
  PauliSum h(n);
  for (std::size_t i = 0; i < lattice.L; ++i) h += cavity.embedded(lattice.atom_qubit(i), n);

  const PauliSum b_dag = photon_create(w);
  const PauliSum b = photon_annihilate(w);
  for (std::size_t i = 0; i < lattice.L; ++i) {
    for (std::size_t j = i + 1; j < lattice.L; ++j) {
      if (!lattice.connected(i, j)) continue;
      const PauliSum hop =
          b_dag.embedded(lattice.photon_offset(i), n) * b.embedded(lattice.photon_offset(j), n) +
          b.embedded(lattice.photon_offset(i), n) * b_dag.embedded(lattice.photon_offset(j), n);
      h -= hop * Complex{p.J, 0.0};
    }
  }
  return h;
}

PauliSum build_jc_raw_frame(const CavityParams& p) {
  p.validate();
  const Spin32Pauli spin = spin32_pauli();
  const PauliSum b_dag = spin.create;
  const PauliSum b = spin.create.adjoint();
  // b^dag b = S I + S_z with S = 3/2.
  const PauliSum number = PauliSum::identity(2, 1.5) + spin.two_sz * Complex{0.5, 0.0};
  const PauliSum s_plus = PauliSum::term("X") + PauliSum::term("Y", Complex{0.0, 1.0});
  const PauliSum s_minus = PauliSum::term("X") + PauliSum::term("Y", Complex{0.0, -1.0});

  PauliSum h = tensor(PauliSum::identity(1), number) * Complex{p.omega, 0.0};
  h += tensor(s_plus * s_minus, PauliSum::identity(2)) * Complex{p.omega0 / 4.0, 0.0};
  h += (tensor(s_plus, b) + tensor(s_minus, b_dag)) * Complex{p.g / 2.0, 0.0};
  return h;
}

}  // namespace qedsim
