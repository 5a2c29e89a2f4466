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

#include "qedsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qedsim {

namespace {

constexpr std::size_t kCavityQubits = 3;

void check_layout(std::size_t n_qubits, std::size_t L) {
  if (L < 1) throw std::invalid_argument("need at least one cavity");
  if (n_qubits != kCavityQubits * L) {
    throw WidthMismatch("state width " + std::to_string(n_qubits) + " does not hold " +
                        std::to_string(L) + " cavities");
  }
}

PauliSum z_sum(std::size_t n, std::initializer_list<std::pair<std::string_view, double>> terms,
               std::size_t offset) {
  std::vector<PauliTerm> out;
  for (const auto& [axes, c] : terms) {
    out.push_back({PauliString(axes).embedded(offset, n), c});
  }
  return PauliSum(n, std::move(out));
}

// Per-cavity first and second moments of n_i accumulated from counts.
struct Moments {
  std::vector<double> s1;
  std::vector<double> s2;
  double shots = 0.0;

  explicit Moments(std::size_t cavities) : s1(cavities, 0.0), s2(cavities, 0.0) {}

  void add(const ShotCounts& counts, const ExcitationOps& ops) {
    for (const auto& [index, n] : counts.counts) {
      const double w = static_cast<double>(n);
      for (std::size_t i = 0; i < s1.size(); ++i) {
        s1[i] += w * z_observable_value(ops.n[i], index);
        s2[i] += w * z_observable_value(ops.n_sq[i], index);
      }
    }
    shots += static_cast<double>(counts.shots);
  }

  double variance(std::size_t L) const {
    double total = 0.0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      const double m1 = s1[i] / shots;
      total += s2[i] / shots - m1 * m1;
    }
    // A single tracked cavity stands for all L of them.
    return s1.size() == 1 ? total * static_cast<double>(L) : total;
  }
};

}  // namespace

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::Statevector: return "statevector";
    case Protocol::Csp: return "csp";
    case Protocol::Vacuum: return "vacuum";
  }
  return "?";
}

Protocol protocol_from_string(const std::string& name) {
  if (name == "statevector") return Protocol::Statevector;
  if (name == "csp") return Protocol::Csp;
  if (name == "vacuum") return Protocol::Vacuum;
  throw std::invalid_argument("unknown protocol '" + name + "'");
}

double lambda_from_probability(double p, std::size_t L) {
  if (L < 1) throw std::invalid_argument("need at least one cavity");
  if (!(p > 0.0)) return std::numeric_limits<double>::infinity();
  return -std::log2(p) / static_cast<double>(L);
}

double lambda_exact(const Statevector& psi0, const Statevector& psit, std::size_t L) {
  return lambda_from_probability(overlap_probability(psi0, psit), L);
}

Circuit csp_circuit(const Circuit& prep_phi, const Circuit& prep_psi) {
  const std::size_t w = prep_phi.n_qubits();
  if (prep_psi.n_qubits() != w) throw WidthMismatch("prepared states differ in width");
  const std::size_t n = 2 * w + 1;
  Circuit c(n);
  c.append(prep_phi.embedded(1, n));
  c.append(prep_psi.embedded(w + 1, n));
  c.h(0);
  for (std::size_t k = 0; k < w; ++k) c.cswap(0, 1 + k, w + 1 + k);
  c.h(0);
  return c;
}

OverlapEstimate csp_from_state(const Statevector& final_state, std::uint64_t shots,
                               std::uint64_t seed, std::size_t L) {
  const ShotCounts counts = sample(final_state, shots, seed);
  const std::uint64_t ancilla = std::uint64_t{1} << (final_state.n_qubits() - 1);
  std::uint64_t zeros = 0;
  for (const auto& [index, n] : counts.counts) {
    if (!(index & ancilla)) zeros += n;
  }
  OverlapEstimate est;
  est.p = 2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0;
  est.lambda = lambda_from_probability(est.p, L);
  est.shots = shots;
  est.protocol = Protocol::Csp;
  return est;
}

OverlapEstimate csp_overlap(const Circuit& prep_phi, const Circuit& prep_psi,
                            std::uint64_t shots, std::uint64_t seed, std::size_t L) {
  const Circuit c = csp_circuit(prep_phi, prep_psi);
  return csp_from_state(run_circuit(c, Statevector(c.n_qubits())), shots, seed, L);
}

Circuit vacuum_circuit(const Circuit& prep_phi, const Circuit& prep_psi) {
  if (prep_psi.n_qubits() != prep_phi.n_qubits()) {
    throw WidthMismatch("prepared states differ in width");
  }
  Circuit c = prep_psi;
  c.append(prep_phi.inverse());
  return c;
}

OverlapEstimate vacuum_from_state(const Statevector& final_state, std::uint64_t shots,
                                  std::uint64_t seed, std::size_t L) {
  const ShotCounts counts = sample(final_state, shots, seed);
  OverlapEstimate est;
  est.p = counts.frequency(0);
  est.lambda = lambda_from_probability(est.p, L);
  est.shots = shots;
  est.protocol = Protocol::Vacuum;
  return est;
}

OverlapEstimate vacuum_overlap(const Circuit& prep_phi, const Circuit& prep_psi,
                               std::uint64_t shots, std::uint64_t seed, std::size_t L) {
  const Circuit c = vacuum_circuit(prep_phi, prep_psi);
  return vacuum_from_state(run_circuit(c, Statevector(c.n_qubits())), shots, seed, L);
}

ExcitationOps excitation_ops(std::size_t L) {
  if (L < 1) throw std::invalid_argument("need at least one cavity");
  const std::size_t n = kCavityQubits * L;
  ExcitationOps ops;
  ops.n_ex = PauliSum(n);
  ops.q_ex = PauliSum(n);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t off = kCavityQubits * i;
    PauliSum ni = z_sum(n, {{"III", 2.0}, {"ZII", -0.5}, {"IZI", -1.0}, {"IIZ", -0.5}}, off);
    PauliSum ni_sq = z_sum(n,
                           {{"III", 5.5},
                            {"ZII", -2.0},
                            {"IZI", -4.0},
                            {"IIZ", -2.0},
                            {"ZZI", 1.0},
                            {"IZZ", 1.0},
                            {"ZIZ", 0.5}},
                           off);
    ops.n_ex += ni;
    ops.q_ex += ni_sq;
    ops.n.push_back(std::move(ni));
    ops.n_sq.push_back(std::move(ni_sq));
  }
  return ops;
}

void Trajectory::validate() const {
  if (values.size() != times.size()) throw std::invalid_argument("trajectory lengths differ");
  if (!ci.empty() && ci.size() != times.size()) {
    throw std::invalid_argument("trajectory CI length differs");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw std::invalid_argument("trajectory times must increase");
  }
}

double excitation_variance(const Statevector& state, std::size_t L, bool shortcut) {
  check_layout(state.n_qubits(), L);
  const ExcitationOps ops = excitation_ops(L);
  const std::size_t tracked = shortcut ? 1 : L;
  double total = 0.0;
  for (std::size_t i = 0; i < tracked; ++i) {
    const double m1 = expectation(state, ops.n[i]);
    total += expectation(state, ops.n_sq[i]) - m1 * m1;
  }
  return shortcut ? total * static_cast<double>(L) : total;
}

double excitation_variance(const ShotCounts& counts, std::size_t L, bool shortcut) {
  check_layout(counts.n_qubits, L);
  const ExcitationOps ops = excitation_ops(L);
  Moments m(shortcut ? 1 : L);
  m.add(counts, ops);
  return m.variance(L);
}

Trajectory variance_trajectory(const std::vector<Statevector>& states,
                               const std::vector<double>& times, std::size_t L,
                               const VarianceOptions& options) {
  if (states.size() != times.size()) throw std::invalid_argument("one time per state required");
  Trajectory traj;
  traj.times = times;
  traj.meta.shots = options.use_shots ? options.shots : 0;
  traj.meta.n_runs = options.use_shots ? options.runs : 1;
  traj.meta.seed = options.seed;
  if (!options.use_shots) {
    for (const auto& s : states) {
      traj.values.push_back(excitation_variance(s, L, options.identical_cavity_shortcut));
    }
    traj.validate();
    return traj;
  }
  if (options.runs < 1) throw std::invalid_argument("runs must be at least 1");
  for (std::size_t m = 0; m < states.size(); ++m) {
    std::vector<double> per_run;
    for (int r = 0; r < options.runs; ++r) {
      const ShotCounts counts =
          sample(states[m], options.shots, derive_seed(options.seed, m, static_cast<std::uint64_t>(r)));
      per_run.push_back(excitation_variance(counts, L, options.identical_cavity_shortcut));
    }
    if (per_run.size() >= 2) {
      const MeanCi mc = mean_ci(per_run);
      traj.values.push_back(mc.mean);
      traj.ci.push_back(mc.ci);
    } else {
      traj.values.push_back(per_run.front());
    }
  }
  traj.validate();
  return traj;
}

double order_parameter(const Trajectory& traj) {
  if (traj.values.empty()) throw std::invalid_argument("empty trajectory");
  const std::size_t n = traj.values.size() == 1 ? 1 : traj.values.size() - 1;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += traj.values[k];
  return sum / static_cast<double>(n);
}

MeanCi mean_ci(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  // Deviations are taken from the first sample (shifted-data algorithm), so
  // equal samples give exactly zero spread.
  const double n = static_cast<double>(samples.size());
  const double shift = samples.front();
  double d_sum = 0.0;
  for (double s : samples) d_sum += s - shift;
  const double d_mean = d_sum / n;
  double ss = 0.0;
  for (double s : samples) ss += (s - shift - d_mean) * (s - shift - d_mean);
  MeanCi out;
  out.mean = shift + d_mean;
  out.stddev = std::sqrt(ss / (n - 1.0));
  out.ci = kZ99 * out.stddev / std::sqrt(n);
  return out;
}

LambdaCi lambda_confidence(double mean_p, double sigma_p, std::size_t L, std::size_t n_runs) {
  if (n_runs < 1) throw std::invalid_argument("need at least one run");
  LambdaCi out;
  out.mean_p = mean_p;
  out.sigma_p = sigma_p;
  out.lambda = lambda_from_probability(mean_p, L);
  if (!(mean_p > 0.0)) {
    out.sigma_lambda = std::numeric_limits<double>::infinity();
    out.ci = std::numeric_limits<double>::infinity();
    out.divergent = true;
    return out;
  }
  out.sigma_lambda = sigma_p / (static_cast<double>(L) * mean_p * std::numbers::ln2);
  out.ci = kZ99 * out.sigma_lambda / std::sqrt(static_cast<double>(n_runs));
  out.divergent = out.ci > out.lambda && out.ci > 0.0;
  return out;
}

LambdaCi confidence_interval(std::span<const double> p_samples, std::size_t L) {
  const MeanCi mc = mean_ci(p_samples);
  return lambda_confidence(mc.mean, mc.stddev, L, p_samples.size());
}

void depolarize(Statevector& state, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing probability outside [0, 1]");
  if (p == 0.0) return;
  static constexpr Pauli kErrors[] = {Pauli::X, Pauli::Y, Pauli::Z};
  const std::size_t n = state.n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (rng.uniform() >= p) continue;
    apply_pauli(state, PauliString::single(n, q, kErrors[rng.below(3)]));
  }
}

Statevector depolarize(const Statevector& state, double p, std::uint64_t seed) {
  Rng rng(seed);
  Statevector out = state;
  depolarize(out, p, rng);
  return out;
}

Trajectory noisy_variance_trajectory(const Statevector& psi0, const PauliSum& h,
                                     const PropagationPlan& plan, std::size_t L,
                                     const NoiseOptions& options) {
  check_layout(psi0.n_qubits(), L);
  if (options.realizations < 2) throw std::invalid_argument("need at least two realizations");
  if (options.shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (!(options.p >= 0.0 && options.p <= 1.0)) {
    throw std::invalid_argument("depolarizing probability outside [0, 1]");
  }
  const ExcitationOps ops = excitation_ops(L);
  const std::size_t n_times = static_cast<std::size_t>(plan.n_time_steps) + 1;
  const auto n_real = static_cast<std::size_t>(options.realizations);

  // per_real[r][m] holds the moments of realization r at time step m.
  std::vector<std::vector<Moments>> per_real(n_real, std::vector<Moments>(n_times, Moments(L)));
  for (std::size_t r = 0; r < n_real; ++r) {
    Rng rng(derive_seed(options.seed, r));
    const auto states =
        propagate(psi0, h, plan, [&](Statevector& s) { depolarize(s, options.p, rng); });
    for (std::size_t m = 0; m < n_times; ++m) {
      per_real[r][m].add(sample(states[m], options.shots, rng), ops);
    }
  }

  Trajectory traj;
  traj.times = plan.times();
  traj.meta.shots = options.shots;
  traj.meta.n_trotter = plan.n_trotter;
  traj.meta.n_runs = options.realizations;
  traj.meta.seed = options.seed;
  for (std::size_t m = 0; m < n_times; ++m) {
    Moments total(L);
    for (std::size_t r = 0; r < n_real; ++r) {
      for (std::size_t i = 0; i < L; ++i) {
        total.s1[i] += per_real[r][m].s1[i];
        total.s2[i] += per_real[r][m].s2[i];
      }
      total.shots += per_real[r][m].shots;
    }
    const double full = total.variance(L);
    // Jackknife over realizations.
    std::vector<double> loo(n_real);
    for (std::size_t r = 0; r < n_real; ++r) {
      Moments rest = total;
      for (std::size_t i = 0; i < L; ++i) {
        rest.s1[i] -= per_real[r][m].s1[i];
        rest.s2[i] -= per_real[r][m].s2[i];
      }
      rest.shots -= per_real[r][m].shots;
      loo[r] = rest.variance(L);
    }
    double mean_loo = 0.0;
    for (double v : loo) mean_loo += v;
    mean_loo /= static_cast<double>(n_real);
    double ss = 0.0;
    for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
    const double var = ss * static_cast<double>(n_real - 1) / static_cast<double>(n_real);
    traj.values.push_back(full);
    traj.ci.push_back(kZ99 * std::sqrt(var));
  }
  traj.validate();
  return traj;
}

}  // namespace qedsim
