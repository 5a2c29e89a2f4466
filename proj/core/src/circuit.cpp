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

#include "qedsim/circuit.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>

namespace qedsim {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 single_qubit_matrix(const Gate& g) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  const double c = std::cos(0.5 * g.angle);
  const double s = std::sin(0.5 * g.angle);
  switch (g.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i, i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::S: return {1.0, 0.0, 0.0, i};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -i};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::RX: return {c, -i * s, -i * s, c};
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::polar(1.0, -0.5 * g.angle), 0.0, 0.0,
                               std::polar(1.0, 0.5 * g.angle)};
    default: throw std::logic_error("not a single-qubit gate");
  }
}

void apply_single(Statevector& state, std::size_t q, const Mat2& m) {
  auto& a = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << (state.n_qubits() - 1 - q);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(k);
    const auto i1 = static_cast<Eigen::Index>(k | bit);
    const Complex a0 = a[i0];
    const Complex a1 = a[i1];
    a[i0] = m[0] * a0 + m[1] * a1;
    a[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_cnot(Statevector& state, std::size_t control, std::size_t target) {
  auto& a = state.amplitudes();
  const std::size_t n = state.n_qubits();
  const std::uint64_t cbit = std::uint64_t{1} << (n - 1 - control);
  const std::uint64_t tbit = std::uint64_t{1} << (n - 1 - target);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t k = 0; k < dim; ++k) {
    if ((k & cbit) && !(k & tbit)) {
      std::swap(a[static_cast<Eigen::Index>(k)], a[static_cast<Eigen::Index>(k | tbit)]);
    }
  }
}

GateKind inverse_kind(GateKind k) {
  switch (k) {
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::T: return GateKind::Tdg;
    case GateKind::Tdg: return GateKind::T;
    default: return k;
  }
}

bool has_angle(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ ||
         k == GateKind::PauliExp;
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::PauliExp: return "PauliExp";
  }
  return "?";
}

Gate Gate::on(GateKind kind, std::size_t q, double angle) {
  if (kind == GateKind::CNOT || kind == GateKind::PauliExp) {
    throw std::invalid_argument(to_string(kind) + " is not a one-qubit gate");
  }
  Gate g;
  g.kind = kind;
  g.q0 = q;
  g.angle = angle;
  return g;
}

Gate Gate::controlled_not(std::size_t control, std::size_t target) {
  Gate g;
  g.kind = GateKind::CNOT;
  g.q0 = control;
  g.q1 = target;
  return g;
}

Circuit& Circuit::add(Gate gate) {
  if (gate.kind == GateKind::PauliExp) {
    if (gate.pauli.size() != n_qubits_) {
      throw WidthMismatch("PauliExp string width differs from the circuit width");
    }
  } else if (gate.q0 >= n_qubits_) {
    throw std::invalid_argument(to_string(gate.kind) + " qubit " + std::to_string(gate.q0) +
                                " out of range");
  }
  if (gate.kind == GateKind::CNOT) {
    if (gate.q1 >= n_qubits_) throw std::invalid_argument("CNOT target out of range");
    if (gate.q0 == gate.q1) throw std::invalid_argument("CNOT control equals target");
  }
  if (!std::isfinite(gate.angle)) throw std::invalid_argument("non-finite gate angle");
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::pauli_exp(const PauliString& p, double angle) {
  Gate g;
  g.kind = GateKind::PauliExp;
  g.angle = angle;
  g.pauli = p;
  return add(std::move(g));
}

Circuit& Circuit::toffoli(std::size_t c0, std::size_t c1, std::size_t target) {
  if (c0 == c1 || c0 == target || c1 == target) {
    throw std::invalid_argument("Toffoli qubits must be distinct");
  }
  h(target);
  cnot(c1, target);
  tdg(target);
  cnot(c0, target);
  t(target);
  cnot(c1, target);
  tdg(target);
  cnot(c0, target);
  t(c1);
  t(target);
  h(target);
  cnot(c0, c1);
  t(c0);
  tdg(c1);
  cnot(c0, c1);
  return *this;
}

Circuit& Circuit::cswap(std::size_t control, std::size_t a, std::size_t b) {
  cnot(b, a);
  toffoli(control, a, b);
  cnot(b, a);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw WidthMismatch("appended circuit width differs");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    g.kind = inverse_kind(g.kind);
    if (has_angle(g.kind)) g.angle = -g.angle;
    out.gates_.push_back(std::move(g));
  }
  return out;
}

Circuit Circuit::embedded(std::size_t offset, std::size_t total_qubits) const {
  if (offset + n_qubits_ > total_qubits) {
    throw WidthMismatch("embedded circuit does not fit the target register");
  }
  Circuit out(total_qubits);
  out.gates_.reserve(gates_.size());
  for (Gate g : gates_) {
    if (g.kind == GateKind::PauliExp) {
      g.pauli = g.pauli.embedded(offset, total_qubits);
    } else {
      g.q0 += offset;
      if (g.kind == GateKind::CNOT) g.q1 += offset;
    }
    out.gates_.push_back(std::move(g));
  }
  return out;
}

Circuit Circuit::lowered() const {
  Circuit out(n_qubits_);
  for (const Gate& g : gates_) {
    if (g.kind != GateKind::PauliExp) {
      out.gates_.push_back(g);
      continue;
    }
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < g.pauli.size(); ++q) {
      if (g.pauli[q] != Pauli::I) support.push_back(q);
    }
    if (support.empty()) continue;  // exp(-i a I) is a global phase
    const double half_pi = std::numbers::pi / 2;
    for (std::size_t q : support) {
      if (g.pauli[q] == Pauli::X) out.h(q);
      if (g.pauli[q] == Pauli::Y) out.rx(q, half_pi);
    }
    for (std::size_t k = 0; k + 1 < support.size(); ++k) out.cnot(support[k], support[k + 1]);
    out.rz(support.back(), 2.0 * g.angle);
    for (std::size_t k = support.size() - 1; k > 0; --k) out.cnot(support[k - 1], support[k]);
    for (std::size_t q : support) {
      if (g.pauli[q] == Pauli::X) out.h(q);
      if (g.pauli[q] == Pauli::Y) out.rx(q, -half_pi);
    }
  }
  return out;
}

void apply_gate(Statevector& state, const Gate& gate) {
  switch (gate.kind) {
    case GateKind::CNOT: apply_cnot(state, gate.q0, gate.q1); return;
    case GateKind::PauliExp: apply_pauli_exp(state, gate.pauli, gate.angle); return;
    default: apply_single(state, gate.q0, single_qubit_matrix(gate)); return;
  }
}

Statevector run_circuit(const Circuit& circuit, const Statevector& initial) {
  if (circuit.n_qubits() != initial.n_qubits()) {
    throw WidthMismatch("circuit and state widths differ");
  }
  Statevector state = initial;
  for (const Gate& g : circuit.gates()) apply_gate(state, g);
  return state;
}

DenseOperator circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n > kMaxDenseQubits) throw std::invalid_argument("circuit too wide for a dense unitary");
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOperator u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t k = 0; k < dim; ++k) {
    u.col(static_cast<Eigen::Index>(k)) =
        run_circuit(circuit, Statevector::basis(n, k)).amplitudes();
  }
  return u;
}

}  // namespace qedsim
