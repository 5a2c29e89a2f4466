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

#include "qedsim/bosonmap.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace qedsim {

namespace {

constexpr double kPseudoInverseCutoff = 1e-12;

PauliSum single_qubit(std::string_view axis, Complex coeff) {
  return PauliSum::term(axis, coeff);
}

// s+ = X + iY and s- = X - iY on one qubit (no factor 1/2).
PauliSum sigma_plus() { return single_qubit("X", 1.0) + single_qubit("Y", Complex{0.0, 1.0}); }
PauliSum sigma_minus() { return single_qubit("X", 1.0) + single_qubit("Y", Complex{0.0, -1.0}); }

// n x n identity as a Pauli sum.
PauliSum eye(std::size_t n) { return PauliSum::identity(n); }

// Embed a (2S+1)-dim raw matrix at the top of the padded 2^w space.
DenseOperator pad_top(const DenseOperator& raw, std::size_t width) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << width);
  const Eigen::Index off = dim - raw.rows();
  DenseOperator out = DenseOperator::Zero(dim, dim);
  out.block(off, off, raw.rows(), raw.cols()) = raw;
  return out;
}

void check_spin(HalfInteger s) {
  if (s.twice() < 1) throw std::invalid_argument("spin must be at least 1/2");
  if (register_width(s.multiplicity()) > kMaxDenseQubits) {
    throw std::invalid_argument("spin " + s.str() + " exceeds the dense register limit");
  }
}

}  // namespace

HalfInteger HalfInteger::from_twice(int twice) {
  if (twice < 0) throw std::invalid_argument("half-integer must be non-negative");
  return HalfInteger(twice);
}

HalfInteger HalfInteger::from_double(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-12) {
    throw std::invalid_argument("value is not a multiple of 1/2");
  }
  return from_twice(static_cast<int>(rounded));
}

std::string HalfInteger::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

BosonOps boson_ops(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const Eigen::Index dim = n_max + 1;
  BosonOps ops;
  ops.n_max = n_max;
  ops.create = DenseOperator::Zero(dim, dim);
  for (Eigen::Index n = 0; n < n_max; ++n) {
    ops.create(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
  }
  ops.annihilate = ops.create.adjoint();
  ops.number = ops.create * ops.annihilate;
  return ops;
}

DenseOperator reversed_order(const DenseOperator& op) { return op.reverse(); }

std::size_t register_width(int levels) {
  if (levels < 1) throw std::invalid_argument("level count must be positive");
  return static_cast<std::size_t>(
      std::bit_width(static_cast<unsigned>(levels - 1)));
}

PauliSum transition(std::uint64_t to, std::uint64_t from, std::size_t n_qubits) {
  if (n_qubits > kMaxQubits) throw std::invalid_argument("register too wide");
  const std::uint64_t limit = n_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  if (to > limit || from > limit) throw std::invalid_argument("basis index out of range");
  PauliSum out = PauliSum::identity(0);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - q);
    const bool t = to & bit;
    const bool f = from & bit;
    PauliSum factor;
    if (t == f) {
      factor = single_qubit("I", 0.5) + single_qubit("Z", t ? -0.5 : 0.5);
    } else {
      // |0><1| = (X + iY)/2, |1><0| = (X - iY)/2.
      factor = single_qubit("X", 0.5) +
               single_qubit("Y", Complex{0.0, t ? -0.5 : 0.5});
    }
    out = tensor(out, factor);
  }
  return out;
}

std::uint64_t unary_basis_index(int m, int n_max) {
  if (n_max < 1 || m < 0 || m > n_max) throw std::invalid_argument("Fock index out of range");
  const auto n = static_cast<std::size_t>(n_max) + 1;
  if (n > kMaxQubits) throw std::invalid_argument("unary register too wide");
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return all ^ (std::uint64_t{1} << (n - 1 - static_cast<std::size_t>(m)));
}

PauliSum one_to_one_create(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const auto n = static_cast<std::size_t>(n_max) + 1;
  PauliSum out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const PauliSum lower = sigma_minus().embedded(i, n);
    const PauliSum raise = sigma_plus().embedded(i + 1, n);
    out += (lower * raise) * Complex{std::sqrt(static_cast<double>(i + 1)) / 4.0, 0.0};
  }
  return out;
}

PauliSum binary_create(std::size_t n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("binary register needs at least one qubit");
  if (n_qubits > kMaxDenseQubits) throw std::invalid_argument("binary register too wide");
  const std::uint64_t levels = std::uint64_t{1} << n_qubits;
  PauliSum out(n_qubits);
  for (std::uint64_t m = 0; m + 1 < levels; ++m) {
    out += transition(m + 1, m, n_qubits) *
           Complex{std::sqrt(static_cast<double>(m + 1)), 0.0};
  }
  return out;
}

SpinOps spin_ops(HalfInteger s) {
  if (s.twice() < 1) throw std::invalid_argument("spin must be at least 1/2");
  const Eigen::Index dim = s.multiplicity();
  const double sv = s.value();
  SpinOps ops;
  ops.s = s;
  ops.sz = DenseOperator::Zero(dim, dim);
  ops.s_plus = DenseOperator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double m = sv - static_cast<double>(k);
    ops.sz(k, k) = m;
    if (k > 0) ops.s_plus(k - 1, k) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  ops.s_minus = ops.s_plus.adjoint();
  ops.sx = 0.5 * (ops.s_plus + ops.s_minus);
  ops.sy = Complex{0.0, -0.5} * (ops.s_plus - ops.s_minus);
  return ops;
}

double NewtonSeries::operator()(double n) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

NewtonSeries newton_series(HalfInteger s) {
  if (s.twice() < 1) throw std::invalid_argument("Newton series needs 2S >= 1");
  const int order = s.twice();
  const double two_s = static_cast<double>(order);
  auto f = [two_s](int l) { return std::sqrt(1.0 - l / two_s); };

  // Forward differences Delta^k f(0) = sum_l (-1)^(k-l) C(k,l) f(l).
  std::vector<double> diffs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    double binom = 1.0;
    double acc = 0.0;
    for (int l = 0; l <= k; ++l) {
      acc += ((k - l) % 2 ? -binom : binom) * f(l);
      binom = binom * (k - l) / (l + 1);
    }
    diffs[static_cast<std::size_t>(k)] = acc;
  }

  // C(n, k) = (n)_k / k! with (n)_k = sum_j s(k, j) n^j, s signed Stirling
  // numbers of the first kind: s(k, j) = s(k-1, j-1) - (k-1) s(k-1, j).
  const auto sz = static_cast<std::size_t>(order) + 1;
  std::vector<std::vector<double>> stirling(sz, std::vector<double>(sz, 0.0));
  stirling[0][0] = 1.0;
  for (std::size_t k = 1; k < sz; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      stirling[k][j] = stirling[k - 1][j - 1] - static_cast<double>(k - 1) * stirling[k - 1][j];
    }
  }
  NewtonSeries series;
  series.s = s;
  series.coeffs.assign(sz, 0.0);
  double factorial = 1.0;
  for (std::size_t k = 0; k < sz; ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    for (std::size_t j = 0; j <= k; ++j) {
      series.coeffs[j] += diffs[k] / factorial * stirling[k][j];
    }
  }
  return series;
}

DenseOperator hp_number(HalfInteger s, HpFrame frame) {
  if (s.twice() < 1) throw std::invalid_argument("spin must be at least 1/2");
  const Eigen::Index dim = s.multiplicity();
  DenseOperator n = DenseOperator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    n(k, k) = frame == HpFrame::Raw ? static_cast<double>(dim - 1 - k)
                                    : static_cast<double>(k);
  }
  return n;
}

HpCreate hp_create(HalfInteger s) {
  check_spin(s);
  const SpinOps spin = spin_ops(s);
  const NewtonSeries h = newton_series(s);
  const Eigen::Index dim = s.multiplicity();
  const double scale = std::sqrt(static_cast<double>(s.twice()));

  // (sqrt(2S) h(S + S_z))^+ in the raw frame.
  DenseOperator root_inv = DenseOperator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double n = s.value() + spin.sz(k, k).real();
    const double root = scale * h(n);
    root_inv(k, k) = std::abs(root) < kPseudoInverseCutoff ? 0.0 : 1.0 / root;
  }

  HpCreate out;
  out.s = s;
  out.raw = spin.s_plus * root_inv;
  const std::size_t width = register_width(s.multiplicity());
  out.dense = reversed_order(pad_top(out.raw, width));
  out.pauli = decompose(out.dense, width);
  return out;
}

PauliSum hp_create_pauli_composed(HalfInteger s) {
  check_spin(s);
  const SpinOps spin = spin_ops(s);
  const NewtonSeries h = newton_series(s);
  const std::size_t width = register_width(s.multiplicity());

  const PauliSum s_plus = decompose(pad_top(spin.s_plus, width), width);
  const PauliSum number =
      PauliSum::identity(width, s.value()) + decompose(pad_top(spin.sz, width), width);

  // h(number) by Horner's rule in Pauli algebra.
  PauliSum poly(width);
  for (auto it = h.coeffs.rbegin(); it != h.coeffs.rend(); ++it) {
    poly = poly * number + PauliSum::identity(width, *it);
  }

  std::vector<double> inv = diagonal_values(poly);
  const double scale = std::sqrt(static_cast<double>(s.twice()));
  for (double& v : inv) {
    const double root = scale * v;
    v = std::abs(root) < kPseudoInverseCutoff ? 0.0 : 1.0 / root;
  }
  const PauliSum raw = s_plus * diagonal_pauli(inv, width);
  return raw.conjugated_by_x_string();
}

Spin32Pauli spin32_pauli() {
  const PauliSum i1 = eye(1);
  const PauliSum x = single_qubit("X", 1.0);
  const PauliSum y = single_qubit("Y", 1.0);
  const PauliSum z = single_qubit("Z", 1.0);
  const PauliSum sp = sigma_plus();
  const PauliSum sm = sigma_minus();
  const double r3 = std::sqrt(3.0);
  const double r2 = std::sqrt(2.0);

  Spin32Pauli out;
  out.two_sx = tensor(i1, x) * Complex{r3, 0.0} + tensor(x, x) + tensor(y, y);
  out.two_sy = tensor(i1, y) * Complex{r3, 0.0} + tensor(y, x) - tensor(x, y);
  const PauliSum up = i1 + z;
  const PauliSum down = i1 - z;
  out.two_sz = (tensor(up, down) - tensor(down, up)) * Complex{0.25, 0.0} +
               (tensor(up, up) - tensor(down, down)) * Complex{0.75, 0.0};
  out.create = tensor(down, sp) * Complex{0.25, 0.0} +
               tensor(sp, sm) * Complex{r2 / 4.0, 0.0} +
               tensor(up, sp) * Complex{r3 / 4.0, 0.0};
  return out;
}

PauliSum diagonal_pauli(const std::vector<double>& diagonal, std::size_t n_qubits) {
  if (n_qubits > kMaxDenseQubits) throw std::invalid_argument("diagonal register too wide");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (diagonal.size() != dim) throw WidthMismatch("diagonal length is not 2^n");
  std::vector<double> v = diagonal;
  for (std::uint64_t h = 1; h < dim; h <<= 1) {
    for (std::uint64_t i = 0; i < dim; i += h << 1) {
      for (std::uint64_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  std::vector<PauliTerm> terms;
  std::string axes(n_qubits, 'I');
  for (std::uint64_t z = 0; z < dim; ++z) {
    for (std::size_t q = 0; q < n_qubits; ++q) {
      axes[q] = (z >> (n_qubits - 1 - q)) & 1U ? 'Z' : 'I';
    }
    terms.push_back({PauliString(axes), v[z] / static_cast<double>(dim)});
  }
  return PauliSum(n_qubits, std::move(terms));
}

std::vector<double> diagonal_values(const PauliSum& diagonal) {
  if (!diagonal.is_diagonal()) throw std::invalid_argument("sum has X or Y axes");
  const std::size_t n = diagonal.n_qubits();
  if (n > kMaxDenseQubits) throw std::invalid_argument("diagonal register too wide");
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<double> out(dim, 0.0);
  for (const auto& t : diagonal.terms()) {
    const std::uint64_t z = t.axes.z_mask();
    const double c = t.coeff.real();
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      out[idx] += (std::popcount(idx & z) & 1U) ? -c : c;
    }
  }
  return out;
}

}  // namespace qedsim
