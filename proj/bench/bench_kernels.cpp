// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "gamma_mitig/kernels.hpp"
#include "gamma_mitig/simulation.hpp"

namespace gm = gamma_mitig;

namespace {

Eigen::MatrixXd random_matrix(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = u(rng);
  return m;
}

// Left factor of 2^(n-1) x 2^(n-1) times one qubit.
template <Eigen::MatrixXd (*Kron)(const Eigen::MatrixXd&, const Eigen::MatrixXd&)>
void BM_Kron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = random_matrix(1 << (n - 1), 1);
  const Eigen::MatrixXd b = random_matrix(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kron(a, b));
  state.SetBytesProcessed(state.iterations() * (std::int64_t{1} << (2 * n)) * static_cast<std::int64_t>(sizeof(double)));
}

void BM_TrialSweep(benchmark::State& state) {
  gm::SimConfig cfg;
  cfg.trials = 200;
  cfg.shots = 8000;
  cfg.seed = 3;
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(gm::run_accuracy_sim(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Kron, gm::kernels::serial::kron)->DenseRange(6, 12, 2)->Name("kron/serial");
BENCHMARK_TEMPLATE(BM_Kron, gm::kernels::omp::kron)->DenseRange(6, 12, 2)->Name("kron/omp");
BENCHMARK(BM_TrialSweep)->Arg(0)->Name("trial_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialSweep)->Arg(1)->Name("trial_sweep/omp")->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  gm::kernels::apply_thread_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
