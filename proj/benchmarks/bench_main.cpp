#include <benchmark/benchmark.h>

#include <cmath>

#include "wfrac/diffusion.hpp"
#include "wfrac/kernels.hpp"
#include "wfrac/laplace.hpp"
#include "wfrac/resolvent.hpp"
#include "wfrac/special.hpp"

namespace {

using namespace wfrac;

void BM_TalbotInvert(benchmark::State& state) {
    const laplace::TalbotConfig cfg{static_cast<int>(state.range(0)), 0.0};
    const laplace::TransformFn F = [](Complex s) { return std::pow(s, -0.5) / (std::sqrt(s) + 1.0); };
    for (auto _ : state) benchmark::DoNotOptimize(laplace::invert(cfg, F, 1.3));
}
BENCHMARK(BM_TalbotInvert)->Arg(16)->Arg(24)->Arg(32);

void BM_PrabhakarSeries(benchmark::State& state) {
    const special::PrabhakarSeries series(0.5, 0.5, 0.5);
    double z = -0.1 * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series.sum(z));
}
BENCHMARK(BM_PrabhakarSeries)->Arg(1)->Arg(10)->Arg(40);

void BM_MittagLefflerIntegral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(special::mittag_leffler(0.7, -20.0));
}
BENCHMARK(BM_MittagLefflerIntegral);

void BM_EvalW(benchmark::State& state) {
    const FracParams p(0.5, 0.5);
    const double t = state.range(0) == 0 ? 1.0 : 200.0;  // series path, Talbot path
    for (auto _ : state) benchmark::DoNotOptimize(kernels::eval_w(p, t));
}
BENCHMARK(BM_EvalW)->Arg(0)->Arg(1);

void BM_WIntegral(benchmark::State& state) {
    const auto grid = TimeGrid::graded(2.0, static_cast<std::size_t>(state.range(0)));
    const auto f = SampledFunction::sample(grid, [](double t) { return std::sin(t); }, 0.0);
    const FracParams p(0.5, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::w_integral(p, f));
}
BENCHMARK(BM_WIntegral)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SolveMode(benchmark::State& state) {
    const resolvent::ModalProblem mp{FracParams(0.5, 0.5), 10.0, 1.0, std::nullopt};
    const auto grid = TimeGrid::logarithmic(1e-3, 5.0, 200);
    for (auto _ : state) benchmark::DoNotOptimize(resolvent::solve_mode(mp, grid));
}
BENCHMARK(BM_SolveMode)->Unit(benchmark::kMillisecond);

void BM_SweepCell(benchmark::State& state) {
    const double alphas[] = {0.5};
    const double betas[] = {0.5};
    const auto base = diffusion::DiffusionSetup::sine_mode(FracParams(0.5, 0.0));
    const auto grid = diffusion::default_sweep_grid();
    for (auto _ : state) benchmark::DoNotOptimize(diffusion::sensitivity_sweep(alphas, betas, base, grid));
}
BENCHMARK(BM_SweepCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
