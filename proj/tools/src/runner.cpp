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

#include "qedsim_tools/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "qedsim/circuit.hpp"
#include "qedsim/prep.hpp"
#include "qedsim/sampling.hpp"

namespace qedsim::cli {

namespace {

std::string fixed(const char* format, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string number_flag(const char* key, double v) { return std::string(key) + "=" + fixed("%.12g", v); }

void append_flag(std::string& flags, const std::string& flag) {
  if (!flags.empty()) flags += ';';
  flags += flag;
}

/** Everything the per-detuning experiments share. */
struct Point {
  std::size_t index = 0;
  double ratio = 0.0;
  CavityParams params;
  PauliSum h;
  Statevector psi0;
  double theta = 0.0;
};

Point make_point(const ExperimentConfig& c, std::size_t index) {
  Point pt;
  pt.index = index;
  pt.ratio = c.detunings[index];
  pt.params = CavityParams::from_detuning_ratio(pt.ratio, c.params.omega, c.params.g, c.params.J);
  pt.h = build_jch(pt.params, c.lattice());
  pt.theta = theta_from_detuning(pt.params.g, 1, pt.params.detuning());
  pt.psi0 = initial_state({1, pt.theta}, c.cavities);
  return pt;
}

std::vector<Statevector> trajectory_states(const ExperimentConfig& c, const Point& pt) {
  const PropagationPlan plan = c.plan();
  if (c.propagator == Propagator::Exact) return exact_propagate(pt.psi0, pt.h, plan.times());
  return propagate(pt.psi0, pt.h, plan);
}

Row base_row(const ExperimentConfig& c, const Point& pt) {
  Row row;
  row.experiment = to_string(c.experiment);
  row.delta_over_g = pt.ratio;
  row.n_trotter = c.propagator == Propagator::Trotter ? c.n_trotter : 0;
  row.seed = c.seed;
  return row;
}

std::vector<Row> lambda_rows(const ExperimentConfig& c, const Point& pt) {
  const std::vector<Statevector> states = trajectory_states(c, pt);
  const std::vector<double> times = c.plan().times();
  const std::size_t L = c.cavities;
  const std::size_t width = pt.psi0.n_qubits();
  const Circuit swap_test = csp_circuit(Circuit(width), Circuit(width));
  const Circuit unprepare = init_circuit(pt.theta, L).inverse();
  const Statevector ancilla = Statevector::basis(1, 0);

  std::vector<Row> rows;
  for (std::size_t m = 0; m < states.size(); ++m) {
    Row row = base_row(c, pt);
    row.time_over_T = times[m] * c.params.J;
    if (c.protocol == Protocol::Statevector) {
      row.value = lambda_exact(pt.psi0, states[m], L);
      if (std::isinf(row.value)) append_flag(row.flags, "singular");
      rows.push_back(row);
      continue;
    }
    const Statevector final_state = c.protocol == Protocol::Csp
                                        ? run_circuit(swap_test, ancilla.tensor(pt.psi0).tensor(states[m]))
                                        : run_circuit(unprepare, states[m]);
    std::vector<double> p_samples;
    for (int r = 0; r < c.runs; ++r) {
      const std::uint64_t seed = derive_seed(c.seed, pt.index, m, static_cast<std::uint64_t>(r));
      const OverlapEstimate est = c.protocol == Protocol::Csp ? csp_from_state(final_state, c.shots, seed, L)
                                                              : vacuum_from_state(final_state, c.shots, seed, L);
      Row run = row;
      run.value = est.lambda;
      run.shots = c.shots;
      run.run_index = r;
      run.seed = seed;
      append_flag(run.flags, number_flag("p", est.p));
      if (est.singular()) append_flag(run.flags, "singular");
      rows.push_back(run);
      p_samples.push_back(est.p);
    }
    if (c.runs >= 2) {
      const LambdaCi ci = confidence_interval(p_samples, L);
      Row summary = row;
      summary.value = ci.lambda;
      summary.ci = ci.ci;
      summary.shots = c.shots;
      summary.run_index = -1;
      append_flag(summary.flags, "summary");
      append_flag(summary.flags, number_flag("p", ci.mean_p));
      if (ci.divergent) append_flag(summary.flags, "divergent");
      if (std::isinf(ci.lambda)) append_flag(summary.flags, "singular");
      rows.push_back(summary);
    }
  }
  return rows;
}

NoiseOptions noise_options(const ExperimentConfig& c, const Point& pt) {
  NoiseOptions opt;
  opt.p = c.noise_p;
  opt.shots = c.shots;
  opt.realizations = c.runs;
  opt.seed = derive_seed(c.seed, pt.index);
  return opt;
}

VarianceOptions variance_options(const ExperimentConfig& c, std::uint64_t seed, int runs) {
  VarianceOptions opt;
  opt.use_shots = c.estimator == Estimator::Shots;
  opt.shots = c.shots;
  opt.runs = runs;
  opt.seed = seed;
  opt.identical_cavity_shortcut = c.identical_cavity_shortcut;
  return opt;
}

std::vector<Row> variance_rows(const ExperimentConfig& c, const Point& pt) {
  const PropagationPlan plan = c.plan();
  Trajectory traj;
  const bool noisy = c.noise_p > 0.0;
  if (noisy) {
    traj = noisy_variance_trajectory(pt.psi0, pt.h, plan, c.cavities, noise_options(c, pt));
  } else {
    traj = variance_trajectory(trajectory_states(c, pt), plan.times(), c.cavities,
                               variance_options(c, derive_seed(c.seed, pt.index), c.runs));
  }
  const bool summary = noisy || (c.estimator == Estimator::Shots && c.runs >= 2);
  std::vector<Row> rows;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    Row row = base_row(c, pt);
    row.time_over_T = traj.times[m] * c.params.J;
    row.value = traj.values[m];
    row.ci = traj.ci.empty() ? 0.0 : traj.ci[m];
    row.shots = traj.meta.shots;
    row.seed = traj.meta.seed;
    if (summary) {
      row.run_index = -1;
      append_flag(row.flags, "summary");
    }
    if (noisy) append_flag(row.flags, number_flag("noise_p", c.noise_p));
    rows.push_back(row);
  }
  return rows;
}

std::vector<Row> order_parameter_rows(const ExperimentConfig& c, const Point& pt) {
  const PropagationPlan plan = c.plan();
  Row row = base_row(c, pt);
  row.time_over_T = c.t_over_T;
  if (c.noise_p > 0.0) {
    const NoiseOptions opt = noise_options(c, pt);
    row.value = order_parameter(noisy_variance_trajectory(pt.psi0, pt.h, plan, c.cavities, opt));
    row.shots = c.shots;
    row.seed = opt.seed;
    row.run_index = -1;
    append_flag(row.flags, "summary");
    append_flag(row.flags, number_flag("noise_p", c.noise_p));
    return {row};
  }
  const std::vector<Statevector> states = trajectory_states(c, pt);
  if (c.estimator == Estimator::Exact) {
    row.value = order_parameter(variance_trajectory(states, plan.times(), c.cavities, variance_options(c, 0, 1)));
    return {row};
  }
  // Each run is an independent shot-estimated trajectory, so the spread of
  // the per-run order parameters gives the confidence interval.
  std::vector<Row> rows;
  std::vector<double> values;
  for (int r = 0; r < c.runs; ++r) {
    const std::uint64_t seed = derive_seed(c.seed, pt.index, 0, static_cast<std::uint64_t>(r));
    Row run = row;
    run.value = order_parameter(variance_trajectory(states, plan.times(), c.cavities, variance_options(c, seed, 1)));
    run.shots = c.shots;
    run.run_index = r;
    run.seed = seed;
    rows.push_back(run);
    values.push_back(run.value);
  }
  if (c.runs >= 2) {
    const MeanCi mc = mean_ci(values);
    Row summary = row;
    summary.value = mc.mean;
    summary.ci = mc.ci;
    summary.shots = c.shots;
    summary.run_index = -1;
    append_flag(summary.flags, "summary");
    rows.push_back(summary);
  }
  return rows;
}

/** Runs `task(i)` for i in [0, n) on up to `jobs` threads; rethrows the first failure by index. */
template <class Result>
std::vector<Result> parallel_map(std::size_t n, int jobs, const std::function<Result(std::size_t)>& task) {
  std::vector<Result> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<Row> detuning_sweep(const ExperimentConfig& c) {
  using Rows = std::vector<Row>;
  const auto per_point = parallel_map<Rows>(c.detunings.size(), c.jobs, [&](std::size_t k) {
    const Point pt = make_point(c, k);
    switch (c.experiment) {
      case Experiment::Lambda: return lambda_rows(c, pt);
      case Experiment::Variance: return variance_rows(c, pt);
      default: return order_parameter_rows(c, pt);
    }
  });
  Rows rows;
  for (const Rows& part : per_point) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

std::string complex_entry(Complex z) {
  const double re = std::abs(z.real()) < 5e-4 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-4 ? 0.0 : z.imag();
  if (im == 0.0) return fixed("%.3f", re);
  if (re == 0.0) return fixed("%.3f", im) + "j";
  return fixed("%.3f", re) + fixed("%+.3f", im) + "j";
}

std::string matrix_table(const char* name, const DenseOperator& m) {
  std::ostringstream out;
  out << name << " =\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      std::string cell = complex_entry(m(r, col));
      out << (col ? " " : "  ") << std::string(cell.size() < 14 ? 14 - cell.size() : 0, ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

RunResult benchmark(const ExperimentConfig& c) {
  const UvBenchmark b = benchmark_uv(c.benchmark_n_trotter);
  RunResult result;
  result.report = matrix_table("U", b.u) + matrix_table("V", b.v) +
                  "rel_err(" + std::to_string(c.benchmark_n_trotter) + ") = " + fixed("%.6f", b.rel_err) + '\n';
  Row row;
  row.experiment = to_string(c.experiment);
  row.value = b.rel_err;
  row.n_trotter = c.benchmark_n_trotter;
  row.seed = c.seed;
  result.rows.push_back(row);
  return result;
}

RunResult gate_scaling(const ExperimentConfig& c) {
  const double ratio = c.detunings.empty() ? 1.0 : c.detunings.front();
  const CavityParams params = CavityParams::from_detuning_ratio(ratio, c.params.omega, c.params.g, c.params.J);
  const PropagationPlan plan = c.plan();
  RunResult result;
  for (std::size_t L = c.scaling_min_cavities; L <= c.scaling_max_cavities; ++L) {
    const LatticeSpec lattice = LatticeSpec::chain(L);
    const GateCount count = count_two_qubit_gates(trotter_step_circuit(build_jch(params, lattice), plan.delta_t(), c.order));
    Row row;
    row.experiment = to_string(c.experiment);
    row.delta_over_g = ratio;
    row.time_over_T = plan.delta_t() * c.params.J;
    row.value = static_cast<double>(count.cancelled);
    row.n_trotter = 1;
    row.seed = c.seed;
    row.flags = "cavities=" + std::to_string(L) + ";qubits=" + std::to_string(lattice.n_qubits()) +
                ";raw_cnots=" + std::to_string(count.raw);
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  switch (config.experiment) {
    case Experiment::BenchmarkUv: return benchmark(config);
    case Experiment::GateScaling: return gate_scaling(config);
    default: return {detuning_sweep(config), {}};
  }
}

}  // namespace qedsim::cli
