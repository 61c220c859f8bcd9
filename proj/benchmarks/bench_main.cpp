// Copyright 2026 The dualsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dualsim/circuit.hpp"
#include "dualsim/duality.hpp"
#include "dualsim/lcu.hpp"
#include "dualsim/linalg.hpp"
#include "dualsim/report.hpp"
#include "../tests/test_util.hpp"

namespace {

using namespace dualsim;

void BM_HermitianEig(benchmark::State& state) {
  testing::Rng rng(1);
  const Matrix h = testing::random_hermitian(std::size_t(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(h));
  }
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PsdSqrt(benchmark::State& state) {
  testing::Rng rng(2);
  const Matrix a = testing::random_matrix(std::size_t(state.range(0)), rng);
  const Matrix psd = matmul(dagger(a), a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_sqrt(psd));
  }
}
BENCHMARK(BM_PsdSqrt)->Arg(8)->Arg(32);

void BM_PurePipeline(benchmark::State& state) {
  testing::Rng rng(3);
  const std::size_t dim = std::size_t(state.range(0));
  const std::size_t paths = std::size_t(state.range(1));
  const StateVector psi = testing::random_state(dim, rng);
  const BranchDistribution p = testing::random_distribution(paths, rng);
  const DualityGate g = testing::random_gate(paths, dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pure_pipeline(psi, p, g));
  }
}
BENCHMARK(BM_PurePipeline)->Args({16, 4})->Args({64, 4})->Args({64, 16});

void BM_DensityPipeline(benchmark::State& state) {
  testing::Rng rng(4);
  const std::size_t dim = std::size_t(state.range(0));
  const DensityMatrix rho = testing::random_density(dim, rng);
  const BranchDistribution p = testing::random_distribution(4, rng);
  const DualityGate g = testing::random_gate(4, dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_density_pipeline(rho, p, g));
  }
}
BENCHMARK(BM_DensityPipeline)->Arg(16)->Arg(64);

void BM_DividedDensityBlocks(benchmark::State& state) {
  testing::Rng rng(5);
  const std::size_t dim = std::size_t(state.range(0));
  const std::size_t paths = std::size_t(state.range(1));
  const DensityMatrix rho = testing::random_density(dim, rng);
  const BranchDistribution p = testing::random_distribution(paths, rng);
  const DualityGate g = testing::random_gate(paths, dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        combine_density(apply_gate_density(divide_density(rho, p), g)));
  }
}
BENCHMARK(BM_DividedDensityBlocks)->Args({8, 4})->Args({16, 8});

void BM_Decompose(benchmark::State& state) {
  testing::Rng rng(6);
  const Matrix a = testing::random_matrix(std::size_t(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(a));
  }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(8);

void BM_ParseCircuit(benchmark::State& state) {
  const std::string text =
      "qubits 2\n"
      "divide 0.25 0.25 0.25 0.25\n"
      "path 0: H 0; CNOT 0 1; RZ 0.25 1\n"
      "path 1: X 0; Y 1; Z 0\n"
      "path 2: ORACLE 1 2\n"
      "path 3: S 0; T 1; CZ 0 1\n"
      "combine\n"
      "measure scenario=renorm eps=1e-9 shots=100 seed=3\n";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_circuit(text));
  }
}
BENCHMARK(BM_ParseCircuit);

void BM_SearchDemo(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_search_demo(n, n - 1, MeasurementScenario::ideal()));
  }
}
BENCHMARK(BM_SearchDemo)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
