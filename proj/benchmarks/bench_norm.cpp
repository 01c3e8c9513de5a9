#include <benchmark/benchmark.h>

#include "rvnorm/matrix.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/oracle.hpp"
#include "rvnorm/partitions.hpp"
#include "rvnorm/symbolic.hpp"
#include "rvnorm/verify.hpp"

using namespace rvnorm;

static void BM_EnumeratePartitions(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(d));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(8)->Arg(16)->Arg(24);

static void BM_HermitianPartitionPath(benchmark::State& state) {
  gen::Rng rng(1);
  const auto a = gen::hermitian_matrix(rng, static_cast<std::size_t>(state.range(0)));
  const InducedNorm norm(DistributionSpec::gamma(2, 1), 8);
  for (auto _ : state) benchmark::DoNotOptimize(norm.hermitian_pow(a));
}
BENCHMARK(BM_HermitianPartitionPath)->Arg(4)->Arg(16)->Arg(64);

static void BM_SeriesPath(benchmark::State& state) {
  gen::Rng rng(2);
  const auto a = gen::hermitian_matrix(rng, 16);
  const InducedNorm norm(DistributionSpec::uniform(-1, 1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(norm.series_pow(a));
}
BENCHMARK(BM_SeriesPath)->Arg(4)->Arg(8)->Arg(12);

static void BM_TracePi(benchmark::State& state) {
  gen::Rng rng(3);
  const auto z = gen::general_matrix(rng, 4);
  const Partition p({static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)) / 2});
  for (auto _ : state) benchmark::DoNotOptimize(t_pi(z, p));
}
BENCHMARK(BM_TracePi)->Arg(4)->Arg(8)->Arg(12);

static void BM_WordPath(benchmark::State& state) {
  gen::Rng rng(4);
  const auto z = gen::general_matrix(rng, 4);
  const InducedNorm norm(DistributionSpec::exponential(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(norm.general_pow(z));
}
BENCHMARK(BM_WordPath)->Arg(4)->Arg(6)->Arg(8);

static void BM_SymbolicFormula(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_formula(d, FormulaMode::general));
}
BENCHMARK(BM_SymbolicFormula)->Arg(4)->Arg(6)->Arg(8);

static void BM_JacobiEigenvalues(benchmark::State& state) {
  gen::Rng rng(5);
  const auto a = gen::hermitian_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(a));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(4)->Arg(16)->Arg(32);

static void BM_MonteCarlo(benchmark::State& state) {
  const std::vector<double> lam{1.0, -0.5, 2.0};
  McOptions options;
  options.samples = static_cast<std::size_t>(state.range(0));
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mc_norm_pow(lam, DistributionSpec::laplace(0, 1), 4, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
