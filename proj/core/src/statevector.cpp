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

#include "qedsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qedsim {

namespace {

void check_width(std::size_t n) {
  if (n > 30) throw std::invalid_argument("statevector limited to 30 qubits");
}

void check_same_width(std::size_t a, std::size_t b) {
  if (a != b) {
    throw WidthMismatch("width " + std::to_string(a) + " does not match " + std::to_string(b));
  }
}

Complex i_power(std::size_t k) {
  static const Complex kTable[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return kTable[k % 4];
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_width(n_qubits);
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
  amps_[0] = 1.0;
}

Statevector Statevector::basis(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw std::invalid_argument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::size_t n_qubits, Eigen::VectorXcd amplitudes,
                                         double tol) {
  Statevector s(n_qubits);
  if (static_cast<std::uint64_t>(amplitudes.size()) != s.dim()) {
    throw WidthMismatch("amplitude vector length is not 2^" + std::to_string(n_qubits));
  }
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol) {
    throw NumericalError("amplitudes are not normalized (norm " + std::to_string(norm) + ")");
  }
  s.amps_ = std::move(amplitudes);
  return s;
}

Statevector Statevector::tensor(const Statevector& other) const {
  Statevector out(n_qubits_ + other.n_qubits_);
  const auto db = static_cast<Eigen::Index>(other.dim());
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    out.amps_.segment(i * db, db) = amps_[i] * other.amps_;
  }
  return out;
}

Complex inner_product(const Statevector& a, const Statevector& b) {
  check_same_width(a.n_qubits(), b.n_qubits());
  return a.amplitudes().dot(b.amplitudes());
}

double overlap_probability(const Statevector& a, const Statevector& b) {
  return std::norm(inner_product(a, b));
}

void apply_pauli(Statevector& state, const PauliString& p) {
  check_same_width(state.n_qubits(), p.size());
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Complex base = i_power(p.y_count());
  auto& a = state.amplitudes();
  const std::uint64_t dim = state.dim();
  // P|c> = base * (-1)^{|c & z|} |c ^ x>.
  for (std::uint64_t c = 0; c < dim; ++c) {
    const std::uint64_t r = c ^ x;
    if (x != 0 && r < c) continue;
    const auto ic = static_cast<Eigen::Index>(c);
    const auto ir = static_cast<Eigen::Index>(r);
    const Complex pc = (std::popcount(c & z) & 1U) ? -base : base;
    if (x == 0) {
      a[ic] *= pc;
      continue;
    }
    const Complex pr = (std::popcount(r & z) & 1U) ? -base : base;
    const Complex ac = a[ic];
    a[ic] = pr * a[ir];
    a[ir] = pc * ac;
  }
}

void apply_pauli_exp(Statevector& state, const PauliString& p, double theta) {
  check_same_width(state.n_qubits(), p.size());
  const double c = std::cos(theta);
  const Complex ms{0.0, -std::sin(theta)};
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Complex base = i_power(p.y_count());
  auto& a = state.amplitudes();
  const std::uint64_t dim = state.dim();
  for (std::uint64_t k = 0; k < dim; ++k) {
    const std::uint64_t r = k ^ x;
    if (x != 0 && r < k) continue;
    const auto ik = static_cast<Eigen::Index>(k);
    const Complex pk = (std::popcount(k & z) & 1U) ? -base : base;
    if (x == 0) {
      a[ik] *= c + ms * pk;
      continue;
    }
    const auto ir = static_cast<Eigen::Index>(r);
    const Complex pr = (std::popcount(r & z) & 1U) ? -base : base;
    const Complex ak = a[ik];
    const Complex ar = a[ir];
    // (P a)[k] = phase(r) a[r], (P a)[r] = phase(k) a[k].
    a[ik] = c * ak + ms * pr * ar;
    a[ir] = c * ar + ms * pk * ak;
  }
}

Statevector apply_sum(const Statevector& state, const PauliSum& op) {
  check_same_width(state.n_qubits(), op.n_qubits());
  Statevector out = state;
  out.amplitudes().setZero();
  for (const auto& t : op.terms()) {
    Statevector tmp = state;
    apply_pauli(tmp, t.axes);
    out.amplitudes() += t.coeff * tmp.amplitudes();
  }
  return out;
}

double expectation(const Statevector& state, const PauliSum& op) {
  check_same_width(state.n_qubits(), op.n_qubits());
  if (!op.is_hermitian()) throw std::invalid_argument("expectation needs a Hermitian operator");
  const auto& a = state.amplitudes();
  const std::uint64_t dim = state.dim();
  Complex total{0.0, 0.0};
  double scale = 0.0;
  for (const auto& t : op.terms()) {
    const std::uint64_t x = t.axes.x_mask();
    const std::uint64_t z = t.axes.z_mask();
    const Complex base = i_power(t.axes.y_count());
    Complex acc{0.0, 0.0};
    // <psi|P|psi> = sum_c conj(a[c ^ x]) phase(c) a[c].
    for (std::uint64_t c = 0; c < dim; ++c) {
      const Complex term = std::conj(a[static_cast<Eigen::Index>(c ^ x)]) *
                           a[static_cast<Eigen::Index>(c)];
      acc += (std::popcount(c & z) & 1U) ? -term : term;
    }
    total += t.coeff * base * acc;
    scale += std::abs(t.coeff);
  }
  // Relative to the coefficient mass so large-gap Hamiltonians do not trip it.
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, scale)) {
    throw NumericalError("expectation has imaginary part " + std::to_string(total.imag()));
  }
  return total.real();
}

}  // namespace qedsim
