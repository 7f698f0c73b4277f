// Serial reference vs OpenMP kernels on solver-sized inputs.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "qcurv/grid.hpp"
#include "qcurv/kernels.hpp"
#include "qcurv/log_potential.hpp"

using namespace qcurv;

namespace {

std::vector<double> ramp(std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = std::sin(0.001 * static_cast<double>(i));
    }
    return v;
}

template <double (*Dot)(std::span<const double>, std::span<const double>)>
void bm_dot(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = ramp(n);
    const auto b = ramp(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Dot(a, b));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <void (*Rows)(const kernels::LogPotentialInputs&, std::span<double>)>
void bm_log_potential(benchmark::State& state)
{
    const int intervals = static_cast<int>(state.range(0));
    const GridPtr g = build_grid(DimensionParam(2), 20.0, intervals, auto_grading(intervals, 20.0));
    const AngularRule rule{DimensionParam(2)};
    std::vector<double> f(g->size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = std::exp(-g->node(i) * g->node(i));
    }
    const kernels::LogPotentialInputs in{g->nodes(), &g->volume_rule(), rule.cosines(), rule.weights(), f};
    std::vector<double> out(g->size());
    for (auto _ : state) {
        Rows(in, out);
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(bm_dot<kernels::serial::dot>)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(bm_dot<kernels::omp::dot>)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(bm_log_potential<kernels::serial::log_potential_rows>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_log_potential<kernels::omp::log_potential_rows>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
