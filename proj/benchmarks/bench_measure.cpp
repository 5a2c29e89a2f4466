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

#include "qedsim/measure.hpp"
#include "qedsim/model.hpp"
#include "qedsim/prep.hpp"
#include "qedsim/sampling.hpp"

namespace {

using namespace qedsim;

Statevector two_cavity_state() {
  const CavityParams p = CavityParams::from_detuning_ratio(1.0);
  return initial_state({1, theta_from_detuning(p.g, 1, p.detuning())}, 2);
}

void BM_Sample(benchmark::State& state) {
  const Statevector psi = two_cavity_state();
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(psi, shots, ++seed));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Sample)->RangeMultiplier(8)->Range(64, 32768);

void BM_SwapTestOverlap(benchmark::State& state) {
  const CavityParams p = CavityParams::from_detuning_ratio(1.0);
  const Circuit prep = init_circuit(theta_from_detuning(p.g, 1, p.detuning()), 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(csp_overlap(prep, prep, 1024, ++seed, 2));
}
BENCHMARK(BM_SwapTestOverlap)->Unit(benchmark::kMillisecond);

void BM_ShotVariance(benchmark::State& state) {
  const ShotCounts counts = sample(two_cavity_state(), 1024, 3);
  const bool shortcut = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(excitation_variance(counts, 2, shortcut));
}
BENCHMARK(BM_ShotVariance)->Arg(0)->Arg(1);

void BM_Depolarize(benchmark::State& state) {
  Statevector psi = two_cavity_state();
  Rng rng(5);
  for (auto _ : state) {
    depolarize(psi, 0.5, rng);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Depolarize);

}  // namespace
