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

#include <cstdint>
#include <string>
#include <vector>

#include "qedsim/pauli.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {

enum class GateKind : std::uint8_t {
  H, X, Y, Z, S, Sdg, T, Tdg,
  RX, RY, RZ,  ///< exp(-i angle sigma / 2)
  CNOT,        ///< qubits[0] control, qubits[1] target
  PauliExp,    ///< exp(-i angle P) for the string in `pauli`
};

std::string to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  ///< target for CNOT; unused otherwise
  double angle = 0.0;
  PauliString pauli;   ///< only for PauliExp

  /** One-qubit gate on `q` (angle used by RX/RY/RZ only). */
  static Gate on(GateKind kind, std::size_t q, double angle = 0.0);
  static Gate controlled_not(std::size_t control, std::size_t target);

  bool is_two_qubit() const { return kind == GateKind::CNOT; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

/** Ordered gate list on a fixed-width register. */
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /** Appends after validating qubit indices; throws std::invalid_argument. */
  Circuit& add(Gate gate);

  Circuit& h(std::size_t q) { return add(Gate::on(GateKind::H, q)); }
  Circuit& x(std::size_t q) { return add(Gate::on(GateKind::X, q)); }
  Circuit& y(std::size_t q) { return add(Gate::on(GateKind::Y, q)); }
  Circuit& z(std::size_t q) { return add(Gate::on(GateKind::Z, q)); }
  Circuit& s(std::size_t q) { return add(Gate::on(GateKind::S, q)); }
  Circuit& sdg(std::size_t q) { return add(Gate::on(GateKind::Sdg, q)); }
  Circuit& t(std::size_t q) { return add(Gate::on(GateKind::T, q)); }
  Circuit& tdg(std::size_t q) { return add(Gate::on(GateKind::Tdg, q)); }
  Circuit& rx(std::size_t q, double angle) { return add(Gate::on(GateKind::RX, q, angle)); }
  Circuit& ry(std::size_t q, double angle) { return add(Gate::on(GateKind::RY, q, angle)); }
  Circuit& rz(std::size_t q, double angle) { return add(Gate::on(GateKind::RZ, q, angle)); }
  Circuit& cnot(std::size_t control, std::size_t target) {
    return add(Gate::controlled_not(control, target));
  }
  Circuit& pauli_exp(const PauliString& p, double angle);

  /** Toffoli from 6 CNOTs plus H/T/Tdg gates. */
  Circuit& toffoli(std::size_t c0, std::size_t c1, std::size_t target);
  /** Controlled swap: CNOT(b->a) Toffoli(c,a->b) CNOT(b->a). */
  Circuit& cswap(std::size_t control, std::size_t a, std::size_t b);

  /** Appends all gates of `other`, which must have the same width. */
  Circuit& append(const Circuit& other);

  /** Gates reversed and individually inverted. */
  Circuit inverse() const;

  /** Copy on a register of `total_qubits`, qubit q mapped to offset + q. */
  Circuit embedded(std::size_t offset, std::size_t total_qubits) const;

  /**
   * Replaces every PauliExp by basis changes (H for X; RX(pi/2) before and
   * RX(-pi/2) after for Y), a CNOT ladder over the support, RZ(2 angle) on
   * the last support qubit, and the mirrored ladder. Identity strings are
   * dropped (global phase).
   */
  Circuit lowered() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/** Applies one gate in place. */
void apply_gate(Statevector& state, const Gate& gate);

/** Runs the gates in order on a copy of `initial`. */
Statevector run_circuit(const Circuit& circuit, const Statevector& initial);

/** Dense unitary of the circuit (column k = circuit applied to |k>). */
DenseOperator circuit_unitary(const Circuit& circuit);

}  // namespace qedsim
