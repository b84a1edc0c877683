#include <benchmark/benchmark.h>

#include "fracplasma/fraccalc.hpp"
#include "fracplasma/plasma.hpp"
#include "fracplasma/potential.hpp"
#include "fracplasma/specialfn.hpp"

#include <cmath>

namespace fp = fracplasma;

namespace {

fp::PlasmaParameters unit_plasma()
{
    return {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
}

void BM_Dawson(benchmark::State& state)
{
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fp::dawson(x));
        x = std::fmod(x + 0.37, 8.0);
    }
}
BENCHMARK(BM_Dawson);

void BM_MittagLeffler(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(fp::mittag_leffler(0.6, 2.5));
}
BENCHMARK(BM_MittagLeffler);

void BM_PermittivityExact(benchmark::State& state)
{
    const fp::PlasmaParameters p = unit_plasma();
    const fp::SpectralPoint sp{1.3, 0.7, {0.8}};
    for (auto _ : state)
        benchmark::DoNotOptimize(fp::permittivity_exact(sp, p));
}
BENCHMARK(BM_PermittivityExact);

void BM_DebyeCorrectionFactor(benchmark::State& state)
{
    fp::PowerLawSymbol sym;
    sym.constant = 1.0;
    sym.terms = {{1.0, 2.0}};
    fp::QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(fp::correction_factor(sym, 1.0, spec));
}
BENCHMARK(BM_DebyeCorrectionFactor);

void BM_FractionalCorrectionFactor(benchmark::State& state)
{
    fp::PowerLawSymbol sym;
    sym.terms = {{1.0, 0.5}, {1.0, 2.0}};
    fp::QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(fp::correction_factor(sym, 1.0, spec));
}
BENCHMARK(BM_FractionalCorrectionFactor);

void BM_CaputoNumeric(benchmark::State& state)
{
    fp::SampledFunction f{[](double t) { return t * t * std::exp(-t); }, 0.0, 2.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(fp::caputo_numeric(f, {0.5}, 1.5));
}
BENCHMARK(BM_CaputoNumeric);

} // namespace

BENCHMARK_MAIN();
