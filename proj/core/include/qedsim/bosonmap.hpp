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

namespace qedsim {

/**
 * Non-negative half-integer, stored as twice its value so that S = 3/2 is
 * exact. Used for spin magnitudes.
 */
class HalfInteger {
 public:
  /** Construct from twice the value; throws std::invalid_argument if < 0. */
  static HalfInteger from_twice(int twice);
  /** Construct from a double that must be a multiple of 1/2. */
  static HalfInteger from_double(double value);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  /** Hilbert-space dimension 2S + 1. */
  int multiplicity() const { return twice_ + 1; }

  std::string str() const;

  friend bool operator==(HalfInteger, HalfInteger) = default;

 private:
  explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/**
 * Truncated single-mode boson operators in the ascending Fock basis
 * |0>, |1>, ..., |n_max>.
 */
struct BosonOps {
  int n_max = 0;
  DenseOperator create;
  DenseOperator annihilate;
  DenseOperator number;
};

/** create has sqrt(n+1) at (n+1, n); number = diag(0..n_max). */
BosonOps boson_ops(int n_max);

/**
 * P op P with P the order-reversing permutation. Maps an ascending-number
 * matrix to its descending counterpart and back.
 */
DenseOperator reversed_order(const DenseOperator& op);

/** Number of qubits needed to hold `levels` states: ceil(log2(levels)). */
std::size_t register_width(int levels);

// -- Generic transitions ----------------------------------------------------

/**
 * |to><from| on an n-qubit register as a Pauli sum, built per qubit from
 * |0><0| = (I+Z)/2, |1><1| = (I-Z)/2, |0><1| = (X+iY)/2, |1><0| = (X-iY)/2.
 */
PauliSum transition(std::uint64_t to, std::uint64_t from, std::size_t n_qubits);

// -- One-to-one (unary) mapping ---------------------------------------------

/**
 * Basis index of Fock state |m> in the unary register of n_max + 1 qubits:
 * qubit m is 0 ("up", occupied) and every other qubit is 1.
 */
std::uint64_t unary_basis_index(int m, int n_max);

/**
 * b^dag = sum_i sqrt(i+1) s-^i s+^(i+1) / 4 with s+- = X +- iY, on n_max + 1
 * qubits. s-^i empties site i and s+^(i+1) fills site i + 1; each carries a
 * factor 2 relative to the bare transition, hence the 1/4.
 */
PauliSum one_to_one_create(int n_max);

// -- Binary mapping ---------------------------------------------------------

/**
 * Creation operator on an n-qubit binary register: Fock |m> is basis index m
 * with qubit 0 the most significant bit. Truncation n_max = 2^n - 1.
 */
PauliSum binary_create(std::size_t n_qubits);

// -- Spin operators and the inverse Holstein-Primakoff mapping ---------------

/** Spin-S matrices in the S_z eigenbasis ordered S, S-1, ..., -S. */
struct SpinOps {
  HalfInteger s = HalfInteger::from_twice(1);
  DenseOperator sx;
  DenseOperator sy;
  DenseOperator sz;
  DenseOperator s_plus;
  DenseOperator s_minus;
};

SpinOps spin_ops(HalfInteger s);

/**
 * Power-basis coefficients of the Newton (forward-difference) interpolant of
 * f(n) = sqrt(1 - n / 2S) at n = 0..2S:
 *   h(n) = sum_k C(n, k) Delta^k f(0) = sum_j coeffs[j] n^j.
 * The interpolant is exact at every node, so h(b^dag b) reproduces the
 * square-root factor on the truncated Fock space.
 */
struct NewtonSeries {
  HalfInteger s = HalfInteger::from_twice(1);
  std::vector<double> coeffs;

  double operator()(double n) const;
};

NewtonSeries newton_series(HalfInteger s);

/** Basis order of an HP matrix. */
enum class HpFrame {
  /** S_z eigenbasis order; the number operator S + S_z is descending. */
  Raw,
  /** Conjugated by the X string: number operator ascending (canonical). */
  Canonical,
};

/**
 * b^dag b = S I + S_z. Raw: diag(2S, ..., 0) of size 2S + 1. Canonical:
 * diag(0, ..., 2S) of size 2S + 1.
 */
DenseOperator hp_number(HalfInteger s, HpFrame frame = HpFrame::Canonical);

/** Creation operator of the inverse HP mapping in several forms. */
struct HpCreate {
  HalfInteger s = HalfInteger::from_twice(1);
  /** S+ (sqrt(2S) h(S I + S_z))^+ in the raw frame, size 2S + 1. */
  DenseOperator raw;
  /**
   * Canonical-frame matrix on the padded register of register_width(2S+1)
   * qubits. The raw block sits at the top of the padded space so that the
   * X-string conjugation maps it onto Fock states 0..2S.
   */
  DenseOperator dense;
  /** Pauli expansion of `dense`. */
  PauliSum pauli;
};

/**
 * Builds b^dag = S+ (S I - S_z)^(-1/2) with the square root taken from the
 * Newton series: sqrt(S I - S_z) = sqrt(2S) h(b^dag b). The inverse is a
 * pseudo-inverse: the vanishing entry on the top state maps to zero, which
 * is unobservable because S+ annihilates that state.
 */
HpCreate hp_create(HalfInteger s);

/**
 * Same operator assembled in Pauli form: the spin S+ Pauli realization times
 * the Pauli form of the inverted diagonal Newton factor, then conjugated by
 * the X string. Agrees with hp_create(s).pauli.
 */
PauliSum hp_create_pauli_composed(HalfInteger s);

/** Hand-derived spin-3/2 Pauli realizations, raw (S_z-ordered) frame. */
struct Spin32Pauli {
  PauliSum two_sx;
  PauliSum two_sy;
  PauliSum two_sz;
  /** Raw-frame b^dag with superdiagonal sqrt3, sqrt2, sqrt1. */
  PauliSum create;
};

/**
 * 2Sx = sqrt3 IX + XX + YY, 2Sy = sqrt3 IY + YX - XY,
 * 2Sz = [(I+Z)(I-Z) - (I-Z)(I+Z)]/4 + 3[(I+Z)(I+Z) - (I-Z)(I-Z)]/4,
 * b^dag = (1/4)(I-Z)s+ + (sqrt2/4)s+s- + (sqrt3/4)(I+Z)s+, with s+- = X +- iY.
 */
Spin32Pauli spin32_pauli();

/** Pauli realization of a real diagonal matrix (I/Z strings only). */
PauliSum diagonal_pauli(const std::vector<double>& diagonal, std::size_t n_qubits);

/** Diagonal entries of an I/Z-only sum; throws if any term has X or Y. */
std::vector<double> diagonal_values(const PauliSum& diagonal);

}  // namespace qedsim
