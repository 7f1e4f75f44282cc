#include <benchmark/benchmark.h>

#include <random>

#include "jtspec/jtspec.hpp"

using namespace jtspec;

static void BM_BuildFullJT(benchmark::State& state)
{
    const auto basis = make_basis(BasisSpec::total_number(static_cast<int>(state.range(0))));
    const auto p = ModelParams::from_kappa2(1.0, 0.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_full_jt(p, basis));
    state.counters["dim"] = static_cast<double>(basis->dim());
}
BENCHMARK(BM_BuildFullJT)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_DiagonalizeFullJT(benchmark::State& state)
{
    const auto basis = make_basis(BasisSpec::total_number(static_cast<int>(state.range(0))));
    const auto h = build_full_jt(ModelParams::from_kappa2(1.0, 0.0, 0.5), basis);
    for (auto _ : state)
        benchmark::DoNotOptimize(diagonalize(h));
    state.counters["dim"] = static_cast<double>(basis->dim());
}
BENCHMARK(BM_DiagonalizeFullJT)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Expm(benchmark::State& state)
{
    const auto n = static_cast<Eigen::Index>(state.range(0));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = Complex(g(rng), g(rng));
    a = 0.5 * (a - a.adjoint()).eval();
    for (auto _ : state)
        benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_Expm)->Arg(50)->Arg(162)->Unit(benchmark::kMillisecond);

static void BM_TableRow(benchmark::State& state)
{
    const auto schedule = total_number_schedule(kDefaultSchedule);
    const auto p = ModelParams::from_kappa2(1.0, 0.0, 0.9);
    for (auto _ : state)
        benchmark::DoNotOptimize(converge_ground(builder_for(ModelKind::FullJT), p, 1e-8, schedule, 2));
}
BENCHMARK(BM_TableRow)->Unit(benchmark::kMillisecond);

static void BM_NonHermitianSpectrum(benchmark::State& state)
{
    ModelParams p;
    p.gamma = 0.3;
    const auto h = build_nonhermitian(p, make_basis(BasisSpec::per_mode(8)));
    for (auto _ : state)
        benchmark::DoNotOptimize(diagonalize(h));
}
BENCHMARK(BM_NonHermitianSpectrum)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
