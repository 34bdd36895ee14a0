#include <benchmark/benchmark.h>

#include "lieder/lie.hpp"
#include "lieder/localder.hpp"
#include "lieder/symcheck.hpp"
#include "lieder/twolocal.hpp"

namespace {

using namespace lieder;

void BM_Bracket(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring ring = Ring::gauss();
  Rng rng(1);
  const SkewMatrix a = random_skew(ring, n, rng);
  const SkewMatrix b = random_skew(ring, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_Bracket)->DenseRange(3, 8);

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const SkewMatrix x = random_skew(Ring::gauss(), n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(x));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 8);

void BM_Reconstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const GaugedInnerTwoLocal oracle(random_skew(Ring::gauss(), n, rng), GaugeModel::Central, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_implementer(oracle));
}
BENCHMARK(BM_Reconstruct)->DenseRange(3, 6);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const LinearLieMap map = LinearLieMap::of_inner(random_skew(Ring::gauss(), n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_implementer(map));
}
BENCHMARK(BM_BruteForce)->DenseRange(3, 6);

void BM_LocalReconstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  const SkewMatrix a0 = random_skew(Ring::gauss(), n, rng);
  for (auto _ : state) {
    // Fresh map per iteration so witness memoization does not carry over.
    const WitnessedLocalMap map = make_inner_local_map(a0, GaugeModel::Central, 5);
    benchmark::DoNotOptimize(build_d(map));
  }
}
BENCHMARK(BM_LocalReconstruction)->DenseRange(3, 6);

void BM_CertifyLemma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_lemma("3.41", n, {1, 2, 3}));
}
BENCHMARK(BM_CertifyLemma)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
