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
#include <map>
#include <random>

#include "qedsim/pauli.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {

/**
 * Seeded generator: std::mt19937_64 (fully specified by the standard, so
 * streams are identical across platforms) with doubles formed from the top
 * 53 bits of each draw, uniform on [0, 1).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /** Uniform integer in [0, n). */
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/** splitmix64 finalizer; mixes a base seed with stream indices. */
std::uint64_t mix_seed(std::uint64_t x);

/** Deterministic per-task seed from a base seed and up to three indices. */
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/** Histogram of measured basis indices. */
struct ShotCounts {
  std::size_t n_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t index) const;
  double frequency(std::uint64_t index) const;
};

/**
 * Multinomial draw of `shots` computational-basis measurements: each shot
 * inverts the cumulative distribution at a uniform variate. Deterministic
 * for a given seed. Throws std::invalid_argument when shots < 1.
 */
ShotCounts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed);
ShotCounts sample(const Statevector& state, std::uint64_t shots, Rng& rng);

/** Eigenvalue of an I/Z-only sum on basis state `index`. */
double z_observable_value(const PauliSum& op, std::uint64_t index);

/**
 * Shot average of an I/Z-only observable. Throws std::invalid_argument if
 * `op` contains X or Y axes or its width differs from the counts.
 */
double estimate_z_observable(const ShotCounts& counts, const PauliSum& op);

}  // namespace qedsim
