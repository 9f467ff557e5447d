// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <rademacher/contour/quadrature.hpp>
#include <rademacher/exact/series.hpp>
#include <rademacher/specfun/specfun.hpp>

using namespace rademacher;

namespace
{

void series_args(benchmark::internal::Benchmark *b)
{
    for (long order : {64, 150, 300}) {
        b->Arg(order);
    }
}

void BM_SeriesMultiplySerial(benchmark::State &state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto a = exact::unit_factor(order / 2 + 3, order);
    const auto b = exact::unit_factor(order + 1, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::multiply_serial(a, b));
    }
}
BENCHMARK(BM_SeriesMultiplySerial)->Apply(series_args)->Unit(benchmark::kMillisecond);

void BM_SeriesMultiplyParallel(benchmark::State &state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto a = exact::unit_factor(order / 2 + 3, order);
    const auto b = exact::unit_factor(order + 1, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::multiply(a, b));
    }
}
BENCHMARK(BM_SeriesMultiplyParallel)->Apply(series_args)->Unit(benchmark::kMillisecond);

// One dilogarithm per node, as in the arc integrator.
hp::Complex dilog_node(std::size_t k)
{
    const hp::Real t(0.01 * static_cast<double>(k + 1), 256);
    return specfun::dilog(expi(t) * hp::Real(0.9, 256)).value;
}

void BM_NodeEvaluationSerial(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(contour::evaluate_nodes_serial(n, dilog_node));
    }
}
BENCHMARK(BM_NodeEvaluationSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_NodeEvaluationParallel(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(contour::evaluate_nodes(n, dilog_node));
    }
}
BENCHMARK(BM_NodeEvaluationParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
