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

#include <benchmark/benchmark.h>

#include "qedsim/evolve.hpp"
#include "qedsim/model.hpp"
#include "qedsim/prep.hpp"

namespace {

using namespace qedsim;

PauliSum chain_hamiltonian(std::size_t L) {
  return build_jch(CavityParams::from_detuning_ratio(1.0), LatticeSpec::chain(L));
}

Statevector chain_state(std::size_t L) {
  const CavityParams p = CavityParams::from_detuning_ratio(1.0);
  return initial_state({1, theta_from_detuning(p.g, 1, p.detuning())}, L);
}

void BM_TrotterStep(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const auto terms = ordered_terms(chain_hamiltonian(L), TermOrder::FlipGrouped);
  Statevector psi = chain_state(L);
  for (auto _ : state) {
    apply_trotter_step(psi, terms, 0.05);
    benchmark::ClobberMemory();
  }
  state.counters["terms"] = static_cast<double>(terms.size());
}
BENCHMARK(BM_TrotterStep)->DenseRange(1, 6, 1)->Unit(benchmark::kMicrosecond);

void BM_PropagateTwoCavities(benchmark::State& state) {
  const PauliSum h = chain_hamiltonian(2);
  const Statevector psi0 = chain_state(2);
  PropagationPlan plan;
  plan.n_trotter = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(psi0, h, plan));
}
BENCHMARK(BM_PropagateTwoCavities)->RangeMultiplier(2)->Range(1, 16)->Unit(benchmark::kMicrosecond);

void BM_ExactPropagator(benchmark::State& state) {
  const PauliSum h = chain_hamiltonian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ExactPropagator(h));
}
BENCHMARK(BM_ExactPropagator)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

void BM_TrotterStepCircuit(benchmark::State& state) {
  const PauliSum h = chain_hamiltonian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_two_qubit_gates(trotter_step_circuit(h, 0.05)));
}
BENCHMARK(BM_TrotterStepCircuit)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

void BM_BenchmarkUv(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(benchmark_uv(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BenchmarkUv)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace
