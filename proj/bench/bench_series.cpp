// Serial reference against the OpenMP kernels on a 10^5-class spectrum.

#include "torzeta/torsion.hpp"
#include "torzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace torzeta;

namespace {

const ClassTable& table() {
    static const ClassTable t(
        generate_synthetic(1, 1.0, 6.7, DensityProfile::parse("capped-exp:2,100000")));
    return t;
}

EvalOptions with(Execution exec) {
    EvalOptions o;
    o.execution = exec;
    return o;
}

void BM_LogRuelle(benchmark::State& state, Execution exec) {
    const auto options = with(exec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_ruelle(table(), CharacterIndex(4), cplx(2.5, 1.0), options));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table().terms().size()));
}

void BM_LogSelberg(benchmark::State& state, Execution exec) {
    const auto options = with(exec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_selberg(table(), CharacterIndex(2), cplx(2.5, 0.0), options));
    }
}

void BM_TorsionSeries(benchmark::State& state, Execution exec) {
    const auto options = with(exec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(torsion_series(table(), 1.0, Parity::even, 40, options));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_LogRuelle, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LogRuelle, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LogSelberg, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LogSelberg, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TorsionSeries, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TorsionSeries, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
