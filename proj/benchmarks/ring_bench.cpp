#include <benchmark/benchmark.h>

#include "ringstar/corpus.hpp"
#include "ringstar/matrix.hpp"
#include "ringstar/star.hpp"

using namespace ringstar;

namespace {

const char* const kRings[] = {"Z/360", "GF(3)[x]/(x^3)", "prod(Z/8,Z/9,Z/5)", "prod(GF(2)[x]/(x^3+x+1),Z/7,Z/9)"};

void BM_BuildRing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_ring(kRings[state.range(0)]).units().size());
}
BENCHMARK(BM_BuildRing)->DenseRange(0, 3);

void BM_EnumerateIdeals(benchmark::State& state) {
  const FiniteRing R = make_ring(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(R).size());
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(0, 3);

void BM_Spectrum(benchmark::State& state) {
  const FiniteRing R = make_ring(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(R).maximal.ideals.size());
}
BENCHMARK(BM_Spectrum)->DenseRange(0, 3);

void BM_RingHasStar(benchmark::State& state) {
  const FiniteRing R = make_ring(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(ring_has_star(R).holds);
}
BENCHMARK(BM_RingHasStar)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Determinant3x3(benchmark::State& state) {
  const FiniteRing R = make_ring("Z/360");
  Matrix a(R, 3);
  for (std::uint32_t k = 0; k < 9; ++k) a.set(k / 3, k % 3, Element{(k * 37 + 11) % 360});
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Determinant3x3);

void BM_DedekindFinite(benchmark::State& state) {
  const MatrixSpace space(make_ring("Z/3"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_finite_check(space));
}
BENCHMARK(BM_DedekindFinite)->Unit(benchmark::kMillisecond);

void BM_CorpusCriterion(benchmark::State& state) {
  CorpusOptions options;
  options.max_carrier = 64;
  for (auto _ : state) benchmark::DoNotOptimize(check_star_agreement(options).checked);
}
BENCHMARK(BM_CorpusCriterion)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
