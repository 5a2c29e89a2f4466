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

#include <complex>
#include <stdexcept>
#include <string>

namespace qedsim {

using Complex = std::complex<double>;

/** Operand widths (qubit counts) disagree. */
class WidthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A numerical invariant was violated at run time, e.g. the norm of a
 * propagated state drifted beyond tolerance.
 */
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Largest register that dense (matrix) realizations accept. */
inline constexpr std::size_t kMaxDenseQubits = 12;

/** Largest register that bitmask-based routines accept. */
inline constexpr std::size_t kMaxQubits = 62;

}  // namespace qedsim
