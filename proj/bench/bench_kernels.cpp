#include "symspec/integrate.hpp"
#include "symspec/kernels.hpp"
#include "symspec/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace symspec;

namespace {

TermTables trace_tables(const DomainParams& domain, int max_weight)
{
    const auto op = bergman_operator(domain, Rational(1, 2), 0);
    const std::vector<PochhammerPower> factors{{op.alpha, 1.0}, {op.nu, -1.0}};
    return build_term_tables(domain, factors, true, max_weight);
}

void block_sums(benchmark::State& state, Execution execution)
{
    const auto domain = make_domain(CartanLabel::type_I(2, 2));
    const int max_weight = static_cast<int>(state.range(0));
    const auto tables = trace_tables(domain, max_weight);
    for (auto _ : state) {
        auto sums = execution == Execution::serial ? block_sums_serial(tables, 0, max_weight)
                                                   : block_sums_parallel(tables, 0, max_weight);
        benchmark::DoNotOptimize(sums.data());
    }
}

void BM_BlockSumsSerial(benchmark::State& state) { block_sums(state, Execution::serial); }
void BM_BlockSumsParallel(benchmark::State& state) { block_sums(state, Execution::parallel); }

void polar(benchmark::State& state, Execution execution)
{
    const PolarSpec spec{make_domain(CartanLabel::type_I(3, 3)), Rational(-1, 4), {}, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(polar_integral(spec, execution).value);
}

void BM_PolarSerial(benchmark::State& state) { polar(state, Execution::serial); }
void BM_PolarParallel(benchmark::State& state) { polar(state, Execution::parallel); }

void mc(benchmark::State& state, Execution execution)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_trace(2, 2, Rational(1, 2), 0, state.range(0), 42, execution).value);
}

void BM_MonteCarloSerial(benchmark::State& state) { mc(state, Execution::serial); }
void BM_MonteCarloParallel(benchmark::State& state) { mc(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_BlockSumsSerial)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockSumsParallel)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
