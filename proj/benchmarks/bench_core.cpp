#include <benchmark/benchmark.h>

#include "sqz/evolve.hpp"
#include "sqz/search.hpp"

using namespace sqz;

namespace {

void bench_propagator_build(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 10.8);
    for (auto _ : state) {
        Propagator prop(params, 10.8);
        benchmark::DoNotOptimize(prop.eigenvalues());
    }
}
BENCHMARK(bench_propagator_build)->Arg(200)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void bench_propagate_step(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 10.8);
    const Propagator prop(params, 10.8);
    const Eigen::VectorXcd a0 = prop.to_spectral(make_initial_css(params));
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-4;
        benchmark::DoNotOptimize(prop.at_time(a0, t));
    }
}
BENCHMARK(bench_propagate_step)->Arg(200)->Arg(1000)->Arg(2000)->Unit(benchmark::kMicrosecond);

void bench_squeezing_report(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 10.8);
    const Propagator prop(params, 10.8);
    const SpinState s = prop.propagate(make_initial_css(params), 5e-3);
    for (auto _ : state) benchmark::DoNotOptimize(squeezing_report(s));
}
BENCHMARK(bench_squeezing_report)->Arg(200)->Arg(1000)->Arg(2000)->Unit(benchmark::kMicrosecond);

void bench_free_evolve(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 0.0);
    const SpinState css = make_initial_css(params);
    for (auto _ : state) benchmark::DoNotOptimize(free_evolve(css, 0.37));
}
BENCHMARK(bench_free_evolve)->Arg(1000)->Arg(2000)->Unit(benchmark::kMicrosecond);

void bench_simulate_scenario(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 10.8);
    const QuenchProtocol protocol = QuenchProtocol::off_at(10.8, 1.1e-2);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(params, protocol, 3e-2, 2e-4));
}
BENCHMARK(bench_simulate_scenario)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void bench_find_first_squeezing_min(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_first_squeezing_min(params, 8.0));
}
BENCHMARK(bench_find_first_squeezing_min)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
