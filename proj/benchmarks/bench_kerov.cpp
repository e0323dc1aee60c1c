#include <benchmark/benchmark.h>

#include "kerov/diagram.hpp"
#include "kerov/kerov.hpp"
#include "kerov/series.hpp"
#include "kerov/stanley.hpp"

namespace {

void bench_kerov_polynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = kerov::kerov_polynomial(k);
    benchmark::DoNotOptimize(result.stats.triples);
  }
}
BENCHMARK(bench_kerov_polynomial)->Arg(5)->Arg(6)->Arg(7)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void bench_kerov_polynomial_threaded(benchmark::State& state) {
  for (auto _ : state) {
    auto result = kerov::kerov_polynomial(8, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(result.stats.triples);
  }
}
BENCHMARK(bench_kerov_polynomial_threaded)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void bench_stanley_sweep(benchmark::State& state) {
  for (auto _ : state) {
    auto sp = kerov::stanley_character({6}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(sp.terms().size());
  }
}
BENCHMARK(bench_stanley_sweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bench_series_roundtrip(benchmark::State& state) {
  kerov::TruncatedSeries r(kerov::SeriesRole::free_cumulants, 12);
  for (int n = 1; n <= 12; ++n) r.set_coeff(n, kerov::Rat(n * 7 % 5 - 2, n));
  for (auto _ : state) {
    auto back = kerov::r_from_s(kerov::s_from_r(r));
    benchmark::DoNotOptimize(back.order());
  }
}
BENCHMARK(bench_series_roundtrip);

void bench_free_cumulants(benchmark::State& state) {
  auto d = kerov::MultiRectangular::from_partition({6, 5, 5, 3, 1});
  for (auto _ : state) {
    auto r = kerov::free_cumulants(d, 10);
    benchmark::DoNotOptimize(r.order());
  }
}
BENCHMARK(bench_free_cumulants);

}  // namespace

BENCHMARK_MAIN();
