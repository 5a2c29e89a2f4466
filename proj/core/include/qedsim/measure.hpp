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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qedsim/circuit.hpp"
#include "qedsim/evolve.hpp"
#include "qedsim/pauli.hpp"
#include "qedsim/sampling.hpp"
#include "qedsim/statevector.hpp"

namespace qedsim {

/** Two-sided 99% normal quantile used for every confidence interval. */
inline constexpr double kZ99 = 2.576;

enum class Protocol : std::uint8_t { Statevector, Csp, Vacuum };

std::string to_string(Protocol p);
/** Accepts "statevector", "csp", "vacuum"; throws std::invalid_argument. */
Protocol protocol_from_string(const std::string& name);

// -- Return probability and Lambda ------------------------------------------------

/**
 * Lambda = -(1/L) log2(p). Returns +infinity for p <= 0, the singular point
 * where the overlap vanishes (or a shot estimate is non-positive).
 */
double lambda_from_probability(double p, std::size_t L);

/** Lambda from the exact overlap |<psi0|psit>|^2. */
double lambda_exact(const Statevector& psi0, const Statevector& psit, std::size_t L);

struct OverlapEstimate {
  double p = 0.0;  ///< estimated |<phi|psi>|^2; may be negative for CSP
  double lambda = 0.0;
  std::uint64_t shots = 0;
  Protocol protocol = Protocol::Statevector;

  bool singular() const { return !(lambda < std::numeric_limits<double>::infinity()); }
};

/**
 * Canonical swap test network on 2w + 1 qubits: ancilla 0, phi on 1..w,
 * psi on w+1..2w. H on the ancilla, one controlled swap per qubit pair, H
 * again. P(ancilla = 0) = 1/2 + |<phi|psi>|^2 / 2.
 */
Circuit csp_circuit(const Circuit& prep_phi, const Circuit& prep_psi);

/** Estimate from the final state of csp_circuit: p = 2 freq(ancilla 0) - 1. */
OverlapEstimate csp_from_state(const Statevector& final_state, std::uint64_t shots,
                               std::uint64_t seed, std::size_t L);

/** Runs csp_circuit from |0...0> and samples; negative p is kept. */
OverlapEstimate csp_overlap(const Circuit& prep_phi, const Circuit& prep_psi,
                            std::uint64_t shots, std::uint64_t seed, std::size_t L = 1);

/** prep_psi followed by the inverse of prep_phi. */
Circuit vacuum_circuit(const Circuit& prep_phi, const Circuit& prep_psi);

/** Estimate from the final state of vacuum_circuit: p = freq(all zeros). */
OverlapEstimate vacuum_from_state(const Statevector& final_state, std::uint64_t shots,
                                  std::uint64_t seed, std::size_t L);

OverlapEstimate vacuum_overlap(const Circuit& prep_phi, const Circuit& prep_psi,
                               std::uint64_t shots, std::uint64_t seed, std::size_t L = 1);

// -- Excitation observables -----------------------------------------------------

/**
 * Per-cavity polariton number and its square as I/Z sums over the layout
 * [atom, photon MSB, photon LSB] per cavity:
 *   n_i   = 2 - 0.5 Z_a - Z_m - 0.5 Z_l
 *   n_i^2 = 5.5 - 2 Z_a - 4 Z_m - 2 Z_l + Z_a Z_m + Z_m Z_l + 0.5 Z_a Z_l
 */
struct ExcitationOps {
  std::vector<PauliSum> n;
  std::vector<PauliSum> n_sq;
  PauliSum n_ex;  ///< sum_i n_i (conserved)
  PauliSum q_ex;  ///< sum_i n_i^2
};

ExcitationOps excitation_ops(std::size_t L);

// -- Trajectories -----------------------------------------------------------------

struct TrajectoryMeta {
  double delta_over_g = 0.0;
  std::uint64_t shots = 0;
  int n_trotter = 0;
  int n_runs = 1;
  std::uint64_t seed = 0;
  Protocol protocol = Protocol::Statevector;
};

/** Time series of one observable. */
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> ci;  ///< empty or one entry per time
  TrajectoryMeta meta;

  std::size_t size() const { return times.size(); }
  /** Throws std::invalid_argument on length mismatch or non-increasing times. */
  void validate() const;
};

struct VarianceOptions {
  /** false: exact expectations; true: estimates from Z-basis shot counts. */
  bool use_shots = false;
  std::uint64_t shots = 1024;
  int runs = 1;
  std::uint64_t seed = 0;
  /**
   * Measure cavity 0 only and multiply by L; valid when all cavities are
   * equivalent, as for the symmetric initial state on a two-cavity chain.
   */
  bool identical_cavity_shortcut = false;
};

/** delta N^2 = sum_i (<n_i^2> - <n_i>^2) for one state. */
double excitation_variance(const Statevector& state, std::size_t L, bool shortcut = false);

/** The same quantity with every moment taken from one set of Z counts. */
double excitation_variance(const ShotCounts& counts, std::size_t L, bool shortcut = false);

/**
 * delta N^2 along a trajectory. In shot mode each run samples fresh counts
 * per time step (seed derived from options.seed, step, run); values are the
 * run means and ci = kZ99 * s / sqrt(runs) when runs >= 2.
 */
Trajectory variance_trajectory(const std::vector<Statevector>& states,
                               const std::vector<double>& times, std::size_t L,
                               const VarianceOptions& options = {});

/**
 * Time average (1/T) int delta N^2 dt as the left-endpoint rectangle rule:
 * the mean of every sample except the last (t = T). A single-sample
 * trajectory returns that sample. Throws std::invalid_argument when empty.
 */
double order_parameter(const Trajectory& traj);

// -- Confidence intervals ---------------------------------------------------------

struct MeanCi {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation (N - 1)
  double ci = 0.0;      ///< kZ99 * stddev / sqrt(N)
};

/** Throws std::invalid_argument for fewer than two samples. */
MeanCi mean_ci(std::span<const double> samples);

struct LambdaCi {
  double mean_p = 0.0;
  double sigma_p = 0.0;
  double lambda = 0.0;        ///< Lambda(mean_p)
  double sigma_lambda = 0.0;  ///< sigma_p / (L mean_p ln 2)
  double ci = 0.0;            ///< kZ99 sigma_lambda / sqrt(N)
  /** mean_p <= 0 or the interval is wider than Lambda itself. */
  bool divergent = false;
};

/** Propagates sigma_P through dLambda/dP = -1 / (L P ln 2). */
LambdaCi lambda_confidence(double mean_p, double sigma_p, std::size_t L, std::size_t n_runs);

/** lambda_confidence from per-run estimates of P. */
LambdaCi confidence_interval(std::span<const double> p_samples, std::size_t L);

// -- Noise ---------------------------------------------------------------------------

/**
 * Stochastic depolarizing channel: each qubit independently suffers, with
 * probability p, an X, Y or Z error chosen uniformly. Averaged over draws
 * this is the Pauli channel that contracts the Bloch vector; repeated at
 * p = 1 it drives every state to the maximally mixed one. Throws
 * std::invalid_argument for p outside [0, 1].
 */
void depolarize(Statevector& state, double p, Rng& rng);
Statevector depolarize(const Statevector& state, double p, std::uint64_t seed);

struct NoiseOptions {
  double p = 1.0;
  std::uint64_t shots = 1024;
  int realizations = 50;
  std::uint64_t seed = 0;
};

/**
 * delta N^2(t) of the noisy ensemble: every realization propagates with a
 * depolarize() call after each Trotter step and is sampled at each time
 * step. The ensemble is the mixed state, so <n_i> and <n_i^2> are pooled
 * over all realizations and shots before forming the variance. ci is a
 * jackknife (leave one realization out) 99% interval.
 */
Trajectory noisy_variance_trajectory(const Statevector& psi0, const PauliSum& h,
                                     const PropagationPlan& plan, std::size_t L,
                                     const NoiseOptions& options);

}  // namespace qedsim
