#include <benchmark/benchmark.h>

#include "triexp/census.hpp"
#include "triexp/dimension.hpp"
#include "triexp/expansion.hpp"

using namespace triexp;

static void BM_ClassifyFinite(benchmark::State& state) {
  const Base b = Base::rational(Rational(3));
  const FieldElement x = eval(EPWord::parse("0qqqqq(1q)*"), b);
  for (auto _ : state) benchmark::DoNotOptimize(classify(x, b));
}
BENCHMARK(BM_ClassifyFinite);

static void BM_ClassifySilver(benchmark::State& state) {
  const Base b(constants::silver_ratio());
  const FieldElement x = eval(EPWord::parse("0(q11)*"), b);
  for (auto _ : state) benchmark::DoNotOptimize(classify(x, b));
}
BENCHMARK(BM_ClassifySilver);

static void BM_IsolateRoots(benchmark::State& state) {
  const IntPolynomial p{-1, 2, -3, 1, 5, -2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots);

static void BM_SpectralRadiusSilver(benchmark::State& state) {
  const SFT m = silver_subshift();
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m));
}
BENCHMARK(BM_SpectralRadiusSilver);

static void BM_BlockBounds(benchmark::State& state) {
  const Base b(constants::silver_ratio());
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_univoque_bounds(b, m));
}
BENCHMARK(BM_BlockBounds)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Alpha(benchmark::State& state) {
  const Base b = Base::rational(Rational(12, 5));
  for (auto _ : state) benchmark::DoNotOptimize(alpha(b, 128));
}
BENCHMARK(BM_Alpha);
BENCHMARK_MAIN();
