#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/fano_planes.hpp"
#include "hodgecalc/schubert.hpp"

#include <benchmark/benchmark.h>

using namespace hodgecalc;

static void BM_LrMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ring = schubert::GrassmannRing::create(2, n);
  const auto s1 = schubert::GrassmannClass::special(ring, 1);
  for (auto _ : state) benchmark::DoNotOptimize(s1.pow(static_cast<unsigned>(ring->dimension())));
}
BENCHMARK(BM_LrMultiply)->Arg(5)->Arg(7)->Arg(9);

static void BM_CiHodgeDiamond(benchmark::State& state) {
  const CompleteIntersection x(static_cast<int>(state.range(0)), {2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(x));
}
BENCHMARK(BM_CiHodgeDiamond)->Arg(3)->Arg(9)->Arg(15);

static void BM_CoverDiamond(benchmark::State& state) {
  const CyclicCover c(static_cast<int>(state.range(0)), 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond_cover(c));
}
BENCHMARK(BM_CoverDiamond)->Arg(3)->Arg(7)->Arg(11);

static void BM_ClassifyLevelOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_level_one(11, 8));
}
BENCHMARK(BM_ClassifyLevelOne);

static void BM_FanoClass(benchmark::State& state) {
  const fano::CoverTarget t{static_cast<int>(state.range(0)), 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(fano::fano_class(t));
}
BENCHMARK(BM_FanoClass)->Arg(2)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
