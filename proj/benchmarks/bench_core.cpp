#include <benchmark/benchmark.h>

#include "banditlab/bandit.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/sim.hpp"

using namespace banditlab;

static void BM_NextUniform(benchmark::State& state) {
    auto stream = derive_stream({1}, 0, 0, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_uniform());
    }
}
BENCHMARK(BM_NextUniform);

static void BM_NextGamma(benchmark::State& state) {
    auto stream = derive_stream({1}, 0, 0, 1);
    const double shape = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_gamma(shape));
    }
}
BENCHMARK(BM_NextGamma)->Arg(5)->Arg(10)->Arg(30);

static void BM_NextBeta(benchmark::State& state) {
    auto stream = derive_stream({1}, 0, 0, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_beta(4.0, 8.0));
    }
}
BENCHMARK(BM_NextBeta);

static void BM_SelectStep(benchmark::State& state, PolicyKind kind) {
    const int k = static_cast<int>(state.range(0));
    auto stream = derive_stream({1}, 0, 1, 0);
    auto env = derive_stream({1}, 0, 2, 0);
    auto scenario_stream = derive_stream({1}, 0, 3, 0);
    const auto scenario = make_scenario_uniform(k, 1, scenario_stream);
    PolicyRunner runner({kind, 0.1}, k);
    for (auto _ : state) {
        const int arm = runner.select(stream);
        runner.observe(arm, draw_reward(scenario, arm, env).value);
    }
}
BENCHMARK_CAPTURE(BM_SelectStep, epsilon_greedy, PolicyKind::EpsilonGreedy)->Arg(20);
BENCHMARK_CAPTURE(BM_SelectStep, ucb1, PolicyKind::Ucb1)->Arg(20);
BENCHMARK_CAPTURE(BM_SelectStep, thompson, PolicyKind::Thompson)->Arg(20);

static void BM_RunOnce(benchmark::State& state) {
    auto scenario_stream = derive_stream({1}, 0, 3, 1);
    const auto scenario = make_scenario_uniform(20, 10000, scenario_stream);
    const auto schedule = checkpoint_schedule(10000, 20);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        auto stream = derive_stream({1}, 0, 1, rep++);
        benchmark::DoNotOptimize(
            run_once(scenario, {PolicyKind::Ucb1, 0.0}, stream, schedule));
    }
}
BENCHMARK(BM_RunOnce)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
