#include <benchmark/benchmark.h>

#include <random>

#include "qae/overlaps.hpp"
#include "qae/pipeline.hpp"
#include "qae/qcqp.hpp"
#include "qae/relax.hpp"

namespace {

using namespace qae;

std::pair<RealMatrix, RealMatrix> random_pencil(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  RealMatrix d(m, m), g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) d(i, j) = d(j, i) = n(rng);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = n(rng);
  RealMatrix e = transpose(g) * g;
  for (std::size_t i = 0; i < m; ++i) e(i, i) += 0.1 * static_cast<double>(m);
  return {d, e};
}

void BM_ExactOverlaps(benchmark::State& state) {
  const auto inst = random_instance(8, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_overlap_matrices(inst.hamiltonian, inst.ansatz));
}
BENCHMARK(BM_ExactOverlaps)->Arg(4)->Arg(8)->Arg(12);

void BM_SampledOverlaps(benchmark::State& state) {
  const auto inst = random_instance(8, 6, 2);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_overlap_matrices_sampled(inst.hamiltonian, inst.ansatz, shots, 3));
}
BENCHMARK(BM_SampledOverlaps)->Arg(1'000)->Arg(1'000'000);

void BM_SolveP1(benchmark::State& state) {
  const auto [d, e] = random_pencil(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(solve_p1(d, e));
}
BENCHMARK(BM_SolveP1)->Arg(4)->Arg(16)->Arg(64);

void BM_DualBound(benchmark::State& state) {
  const auto [d, e] = random_pencil(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(dual_bound(d, e));
}
BENCHMARK(BM_DualBound)->Arg(4)->Arg(16);

void BM_SdpBound(benchmark::State& state) {
  const auto [d, e] = random_pencil(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(sdp_bound(d, e));
}
BENCHMARK(BM_SdpBound)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
