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

#include "qedsim/model.hpp"
#include "qedsim/pauli.hpp"
#include "qedsim/sampling.hpp"
#include "qedsim/statevector.hpp"

namespace {

using namespace qedsim;

/** Deterministic Hermitian operator with every entry populated. */
DenseOperator dense_hermitian(std::size_t n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Rng rng(7);
  DenseOperator m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  return (m + m.adjoint()) / 2.0;
}

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseOperator op = dense_hermitian(n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(op, n));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_ApplyPauliExp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::string axes(n, 'I');
  for (std::size_t q = 0; q < n; q += 3) axes[q] = "XYZ"[q % 3];
  const PauliString p(axes);
  Statevector psi = Statevector::basis(n, 1);
  for (auto _ : state) {
    apply_pauli_exp(psi, p, 0.01);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(sizeof(Complex) << n));
}
BENCHMARK(BM_ApplyPauliExp)->DenseRange(6, 21, 3);

void BM_BuildJch(benchmark::State& state) {
  const CavityParams params = CavityParams::from_detuning_ratio(1.0);
  const LatticeSpec lattice = LatticeSpec::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_jch(params, lattice));
}
BENCHMARK(BM_BuildJch)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

void BM_MatrixOfJch(benchmark::State& state) {
  const PauliSum h = build_jch(CavityParams::from_detuning_ratio(1.0), LatticeSpec::chain(2));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_of(h));
}
BENCHMARK(BM_MatrixOfJch)->Unit(benchmark::kMicrosecond);

}  // namespace
