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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qedsim/errors.hpp"

namespace qedsim {

/** Square complex matrix; on qubits its dimension is 2^n. */
using DenseOperator = Eigen::MatrixXcd;

/** Symbols for the single-qubit Pauli operators (and identity). */
enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * Tensor product of single-qubit Paulis, stored as a string over {I,X,Y,Z}.
 *
 * Character k acts on qubit k. Qubit 0 is the most significant bit of a
 * computational basis index, so "XI" flips the high bit of a 2-qubit index.
 * A PauliString carries no phase; all phases live in PauliTerm coefficients.
 * Ordering is lexicographic with I < X < Y < Z.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string_view axes);

  static PauliString identity(std::size_t n_qubits);
  /** Single non-identity axis `p` on `qubit` of an `n_qubits` register. */
  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);

  std::size_t size() const { return axes_.size(); }
  Pauli operator[](std::size_t qubit) const;
  std::string_view str() const { return axes_; }

  /** Number of non-identity axes. */
  std::size_t weight() const;
  bool is_identity() const { return weight() == 0; }
  /** True when every axis is I or Z. */
  bool is_diagonal() const;

  /** Basis-index bits flipped by the string (X and Y axes). */
  std::uint64_t x_mask() const;
  /** Basis-index bits that pick up a sign (Y and Z axes). */
  std::uint64_t z_mask() const;
  std::size_t y_count() const;

  bool commutes_with(const PauliString& other) const;

  /** Identity-padded copy of width `n_qubits`, with this string at `offset`. */
  PauliString embedded(std::size_t offset, std::size_t n_qubits) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::string axes_;
};

/** Product a*b as (phase, string). */
std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b);

struct PauliTerm {
  PauliString axes;
  Complex coeff{1.0, 0.0};
};

/** Default drop tolerance used when canonicalizing sums. */
inline constexpr double kDropTolerance = 1e-12;

/**
 * Weighted sum of Pauli strings on a fixed-width register.
 *
 * Always canonical: terms sorted lexicographically by axes, duplicates
 * merged, and coefficients with magnitude below the drop tolerance removed.
 * Values are immutable once built apart from the compound assignment
 * operators, which re-canonicalize.
 */
class PauliSum {
 public:
  explicit PauliSum(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms,
           double tol = kDropTolerance);

  static PauliSum identity(std::size_t n_qubits, Complex coeff = 1.0);
  /** Sum with the single term `coeff * axes`; width taken from `axes`. */
  static PauliSum term(std::string_view axes, Complex coeff = 1.0);

  std::size_t n_qubits() const { return n_qubits_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /** Coefficient of `axes`, zero when absent. */
  Complex coefficient(const PauliString& axes) const;
  std::size_t max_weight() const;

  PauliSum adjoint() const;
  /** Every coefficient real to within `tol`; Pauli strings are Hermitian. */
  bool is_hermitian(double tol = kDropTolerance) const;
  /** True when every term is I/Z only. */
  bool is_diagonal() const;

  /** Copy acting on qubits [offset, offset + n_qubits()) of a wider register. */
  PauliSum embedded(std::size_t offset, std::size_t total_qubits) const;

  /**
   * X^{(x)n} * this * X^{(x)n}: flips the sign of every Y and Z axis. This
   * relabels |0> <-> |1> on every qubit, i.e. it reverses basis order.
   */
  PauliSum conjugated_by_x_string() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  void canonicalize(double tol);

  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/** Distributes term by term; throws WidthMismatch on unequal widths. */
PauliSum multiply(const PauliSum& a, const PauliSum& b);

/** Tensor product a (x) b: a acts on the leading qubits, b on the trailing. */
PauliSum tensor(const PauliSum& a, const PauliSum& b);

/** Kronecker realization, padded with identities up to `n_qubits`. */
DenseOperator matrix_of(const PauliTerm& term, std::size_t n_qubits);
DenseOperator matrix_of(const PauliSum& sum, std::size_t n_qubits);
inline DenseOperator matrix_of(const PauliSum& sum) {
  return matrix_of(sum, sum.n_qubits());
}

/**
 * Expansion of `op` in Pauli strings, C_l = Tr(P_l op) / 2^n.
 *
 * Runs a Walsh-Hadamard transform per X-mask, so the cost is O(n 4^n)
 * rather than the naive O(8^n). Coefficients below `tol` are dropped.
 */
PauliSum decompose(const DenseOperator& op, std::size_t n_qubits,
                   double tol = kDropTolerance);

/** Largest |entry| of the matrix of `sum`, computed without storing it. */
double max_abs_entry(const PauliSum& sum);

/** Largest |entry| of ab - ba. */
double commutator_norm(const PauliSum& a, const PauliSum& b);

/** One line per term: "coeff_re coeff_im AXES". */
std::string to_text(const PauliSum& sum);
/** Inverse of to_text; blank lines and lines starting with '#' are skipped. */
PauliSum from_text(std::string_view text);

}  // namespace qedsim
