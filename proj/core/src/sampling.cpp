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

#include "qedsim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace qedsim {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs n > 0");
  // Rejection keeps the result unbiased: discard the short final bucket.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t h = mix_seed(base);
  h = mix_seed(h ^ a);
  h = mix_seed(h ^ b);
  return mix_seed(h ^ c);
}

std::uint64_t ShotCounts::count(std::uint64_t index) const {
  const auto it = counts.find(index);
  return it == counts.end() ? 0 : it->second;
}

double ShotCounts::frequency(std::uint64_t index) const {
  if (shots == 0) throw std::invalid_argument("no shots recorded");
  return static_cast<double>(count(index)) / static_cast<double>(shots);
}

ShotCounts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed) {
  Rng rng(seed);
  return sample(state, shots, rng);
}

ShotCounts sample(const Statevector& state, std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  const Eigen::VectorXd probs = state.probabilities();
  std::vector<double> cumulative(static_cast<std::size_t>(probs.size()));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    cumulative[static_cast<std::size_t>(k)] = acc;
  }
  ShotCounts out;
  out.n_qubits = state.n_qubits();
  out.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    // Scale by the total so rounding in the norm never leaves a gap at 1.
    const double u = rng.uniform() * acc;
    // First index whose cumulative mass exceeds u; never a zero-probability
    // state, since such a state shares the cumulative value of its predecessor.
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++out.counts[static_cast<std::uint64_t>(it - cumulative.begin())];
  }
  return out;
}

double z_observable_value(const PauliSum& op, std::uint64_t index) {
  double value = 0.0;
  for (const auto& t : op.terms()) {
    const double c = t.coeff.real();
    value += (std::popcount(index & t.axes.z_mask()) & 1U) ? -c : c;
  }
  return value;
}

double estimate_z_observable(const ShotCounts& counts, const PauliSum& op) {
  if (!op.is_diagonal()) {
    throw std::invalid_argument("shot estimates need an I/Z-only observable");
  }
  if (op.n_qubits() != counts.n_qubits) throw WidthMismatch("observable width differs from counts");
  if (counts.shots == 0) throw std::invalid_argument("no shots recorded");
  double total = 0.0;
  for (const auto& [index, n] : counts.counts) {
    total += static_cast<double>(n) * z_observable_value(op, index);
  }
  return total / static_cast<double>(counts.shots);
}

}  // namespace qedsim
