#include <benchmark/benchmark.h>

#include "gravheun/heun_gravity.hpp"
#include "gravheun/ho_spectrum.hpp"
#include "gravheun/specfun.hpp"

using namespace gravheun;

static void BM_pcf_d(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 4.0;
    double nu = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcf_d(cplx(nu, 0.0), z));
        nu += 1e-9;
    }
}
BENCHMARK(BM_pcf_d)->Arg(1)->Arg(8)->Arg(24);

static void BM_kummer_m(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kummer_m(cplx(-1.7, 0.0), cplx(1.5, 0.0), cplx(x, 0.0)));
}
BENCHMARK(BM_kummer_m)->Arg(1)->Arg(10)->Arg(40);

static void BM_oscillator_determinant(benchmark::State& state) {
    const auto bd = BoundaryData::from_b(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(rotated_determinant(3.5, bd));
}
BENCHMARK(BM_oscillator_determinant);

static void BM_gravity_determinant(benchmark::State& state) {
    const double b = static_cast<double>(state.range(0)) / 2.0;
    for (auto _ : state) benchmark::DoNotOptimize(gravity_determinant(b, 3.5, 0.5));
}
BENCHMARK(BM_gravity_determinant)->Arg(1)->Arg(2)->Arg(4);

static void BM_shooting_oracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(shooting_oracle(1.0, 0.5, 2.84));
}
BENCHMARK(BM_shooting_oracle)->Unit(benchmark::kMillisecond);

static void BM_gravity_spectrum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eigen_gravity(1.0, 0.5, 0.0, 10.0, 1e-10));
}
BENCHMARK(BM_gravity_spectrum)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
