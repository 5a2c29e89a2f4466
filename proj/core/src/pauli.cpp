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

#include "qedsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace qedsim {

namespace {

// i^k for k mod 4.
Complex i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Phase and result of the single-qubit product a*b.
std::pair<Complex, Pauli> multiply_single(Pauli a, Pauli b) {
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X=1, Y=2, Z=3: cyclic (X,Y), (Y,Z), (Z,X) gives +i.
  const int third = 6 - ia - ib;
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? Complex{0.0, 1.0} : Complex{0.0, -1.0},
          static_cast<Pauli>(third)};
}

void check_mask_width(std::size_t n) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(n) +
                                " qubits exceeds the supported maximum");
  }
}

void check_dense_width(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense realization limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
}

// Sign (-1)^{popcount(c & z)} times i^{nY}: the amplitude P puts on |c^x>.
inline Complex pauli_phase(std::uint64_t c, std::uint64_t z, Complex base) {
  return (std::popcount(c & z) & 1U) ? -base : base;
}

}  // namespace

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli axis '") + c +
                                  "'");
  }
}

PauliString::PauliString(std::string_view axes) : axes_(axes) {
  for (char c : axes_) pauli_from_char(c);
}

PauliString PauliString::identity(std::size_t n_qubits) {
  PauliString s;
  s.axes_.assign(n_qubits, 'I');
  return s;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                Pauli p) {
  if (qubit >= n_qubits) throw WidthMismatch("qubit index out of range");
  PauliString s = identity(n_qubits);
  s.axes_[qubit] = to_char(p);
  return s;
}

Pauli PauliString::operator[](std::size_t qubit) const {
  return pauli_from_char(axes_.at(qubit));
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(
      std::count_if(axes_.begin(), axes_.end(), [](char c) { return c != 'I'; }));
}

bool PauliString::is_diagonal() const {
  return std::all_of(axes_.begin(), axes_.end(),
                     [](char c) { return c == 'I' || c == 'Z'; });
}

std::uint64_t PauliString::x_mask() const {
  check_mask_width(size());
  std::uint64_t mask = 0;
  const std::size_t n = size();
  for (std::size_t q = 0; q < n; ++q) {
    if (axes_[q] == 'X' || axes_[q] == 'Y') mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::uint64_t PauliString::z_mask() const {
  check_mask_width(size());
  std::uint64_t mask = 0;
  const std::size_t n = size();
  for (std::size_t q = 0; q < n; ++q) {
    if (axes_[q] == 'Z' || axes_[q] == 'Y') mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::size_t PauliString::y_count() const {
  return static_cast<std::size_t>(std::count(axes_.begin(), axes_.end(), 'Y'));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (size() != other.size()) throw WidthMismatch("Pauli strings differ in width");
  std::size_t anti = 0;
  for (std::size_t q = 0; q < size(); ++q) {
    const char a = axes_[q];
    const char b = other.axes_[q];
    if (a != 'I' && b != 'I' && a != b) ++anti;
  }
  return anti % 2 == 0;
}

PauliString PauliString::embedded(std::size_t offset,
                                  std::size_t n_qubits) const {
  if (offset + size() > n_qubits) {
    throw WidthMismatch("embedding does not fit the target register");
  }
  PauliString s = identity(n_qubits);
  std::copy(axes_.begin(), axes_.end(), s.axes_.begin() + static_cast<std::ptrdiff_t>(offset));
  return s;
}

std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b) {
  if (a.size() != b.size()) throw WidthMismatch("Pauli strings differ in width");
  Complex phase{1.0, 0.0};
  std::string out(a.size(), 'I');
  for (std::size_t q = 0; q < a.size(); ++q) {
    auto [ph, p] = multiply_single(a[q], b[q]);
    phase *= ph;
    out[q] = to_char(p);
  }
  return {phase, PauliString(out)};
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms,
                   double tol)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.axes.size() != n_qubits_) {
      throw WidthMismatch("term " + std::string(t.axes.str()) +
                          " does not match register width " +
                          std::to_string(n_qubits_));
    }
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
      throw std::invalid_argument("non-finite Pauli coefficient");
    }
  }
  canonicalize(tol);
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coeff) {
  return PauliSum(n_qubits, {{PauliString::identity(n_qubits), coeff}});
}

PauliSum PauliSum::term(std::string_view axes, Complex coeff) {
  PauliString s(axes);
  const std::size_t n = s.size();
  return PauliSum(n, {{std::move(s), coeff}});
}

void PauliSum::canonicalize(double tol) {
  std::map<PauliString, Complex> merged;
  for (auto& t : terms_) merged[t.axes] += t.coeff;
  terms_.clear();
  terms_.reserve(merged.size());
  for (auto& [axes, c] : merged) {
    if (std::abs(c) >= tol) terms_.push_back({axes, c});
  }
}

Complex PauliSum::coefficient(const PauliString& axes) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), axes,
      [](const PauliTerm& t, const PauliString& s) { return t.axes < s; });
  if (it != terms_.end() && it->axes == axes) return it->coeff;
  return {0.0, 0.0};
}

std::size_t PauliSum::max_weight() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.axes.weight());
  return w;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliTerm& t) {
    return std::abs(t.coeff.imag()) <= tol;
  });
}

bool PauliSum::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PauliTerm& t) { return t.axes.is_diagonal(); });
}

PauliSum PauliSum::embedded(std::size_t offset, std::size_t total_qubits) const {
  std::vector<PauliTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    terms.push_back({t.axes.embedded(offset, total_qubits), t.coeff});
  }
  return PauliSum(total_qubits, std::move(terms));
}

PauliSum PauliSum::conjugated_by_x_string() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) {
    const std::size_t flips = t.axes.y_count() +
        static_cast<std::size_t>(std::count(t.axes.str().begin(), t.axes.str().end(), 'Z'));
    if (flips % 2) t.coeff = -t.coeff;
  }
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw WidthMismatch("PauliSum widths differ");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize(kDropTolerance);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw WidthMismatch("PauliSum widths differ");
  for (const auto& t : other.terms_) terms_.push_back({t.axes, -t.coeff});
  canonicalize(kDropTolerance);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  canonicalize(kDropTolerance);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply(a, b); }

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw WidthMismatch("PauliSum widths differ");
  std::vector<PauliTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto [phase, axes] = multiply(ta.axes, tb.axes);
      out.push_back({std::move(axes), phase * ta.coeff * tb.coeff});
    }
  }
  return PauliSum(a.n_qubits(), std::move(out));
}

PauliSum tensor(const PauliSum& a, const PauliSum& b) {
  std::vector<PauliTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      std::string axes(ta.axes.str());
      axes += tb.axes.str();
      out.push_back({PauliString(axes), ta.coeff * tb.coeff});
    }
  }
  return PauliSum(a.n_qubits() + b.n_qubits(), std::move(out));
}

DenseOperator matrix_of(const PauliTerm& term, std::size_t n_qubits) {
  if (term.axes.size() > n_qubits) {
    throw WidthMismatch("Pauli string longer than the register");
  }
  check_dense_width(n_qubits);
  const PauliString axes = term.axes.embedded(0, n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const std::uint64_t x = axes.x_mask();
  const std::uint64_t z = axes.z_mask();
  const Complex base = term.coeff * i_power(axes.y_count());
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) =
        pauli_phase(c, z, base);
  }
  return m;
}

DenseOperator matrix_of(const PauliSum& sum, std::size_t n_qubits) {
  if (sum.n_qubits() > n_qubits) {
    throw WidthMismatch("PauliSum wider than the register");
  }
  check_dense_width(n_qubits);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : sum.terms()) m += matrix_of(t, n_qubits);
  return m;
}

PauliSum decompose(const DenseOperator& op, std::size_t n_qubits, double tol) {
  check_dense_width(n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (op.rows() != op.cols() || static_cast<std::uint64_t>(op.rows()) != dim) {
    throw std::invalid_argument("operator dimension " + std::to_string(op.rows()) +
                                " is not 2^" + std::to_string(n_qubits));
  }
  const double norm = 1.0 / static_cast<double>(dim);
  std::vector<PauliTerm> terms;
  std::vector<Complex> v(dim);
  std::string axes(n_qubits, 'I');
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      v[c] = op(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
    }
    // In-place Walsh-Hadamard: v[z] <- sum_c (-1)^{popcount(c & z)} v[c].
    for (std::uint64_t h = 1; h < dim; h <<= 1) {
      for (std::uint64_t i = 0; i < dim; i += h << 1) {
        for (std::uint64_t j = i; j < i + h; ++j) {
          const Complex a = v[j];
          const Complex b = v[j + h];
          v[j] = a + b;
          v[j + h] = a - b;
        }
      }
    }
    for (std::uint64_t z = 0; z < dim; ++z) {
      const Complex c = v[z] * norm * i_power(static_cast<std::size_t>(std::popcount(x & z)));
      if (std::abs(c) < tol) continue;
      for (std::size_t q = 0; q < n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - q);
        const bool xb = x & bit;
        const bool zb = z & bit;
        axes[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
      }
      terms.push_back({PauliString(axes), c});
    }
  }
  return PauliSum(n_qubits, std::move(terms), tol);
}

double max_abs_entry(const PauliSum& sum) {
  const std::size_t n = sum.n_qubits();
  check_mask_width(n);
  if (n > 30) throw std::invalid_argument("max_abs_entry limited to 30 qubits");
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Complex>>> by_x;
  for (const auto& t : sum.terms()) {
    by_x[t.axes.x_mask()].emplace_back(t.axes.z_mask(),
                                       t.coeff * i_power(t.axes.y_count()));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  double best = 0.0;
  for (const auto& [x, group] : by_x) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      Complex entry{0.0, 0.0};
      for (const auto& [z, base] : group) entry += pauli_phase(c, z, base);
      best = std::max(best, std::abs(entry));
    }
  }
  return best;
}

double commutator_norm(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw WidthMismatch("PauliSum widths differ");
  return max_abs_entry(a * b - b * a);
}

std::string to_text(const PauliSum& sum) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& t : sum.terms()) {
    os << t.coeff.real() << ' ' << t.coeff.imag() << ' ' << t.axes.str() << '\n';
  }
  return os.str();
}

PauliSum from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<PauliTerm> terms;
  std::size_t width = 0;
  bool have_width = false;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    std::string axes;
    if (!(ls >> re >> im >> axes)) {
      throw std::invalid_argument("malformed Pauli line " + std::to_string(lineno));
    }
    PauliString s(axes);
    if (!have_width) {
      width = s.size();
      have_width = true;
    } else if (s.size() != width) {
      throw WidthMismatch("inconsistent widths at line " + std::to_string(lineno));
    }
    terms.push_back({std::move(s), {re, im}});
  }
  return PauliSum(width, std::move(terms));
}

}  // namespace qedsim
