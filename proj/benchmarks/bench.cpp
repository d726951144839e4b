#include <benchmark/benchmark.h>

#include "hotelling/equilibrium.hpp"
#include "hotelling/oracle.hpp"

using namespace hotelling;

namespace {

void BM_survival_integral_analytic(benchmark::State& state) {
    const Distribution dist = Distribution::pareto(1.5, 0.01);
    for (auto _ : state) benchmark::DoNotOptimize(dist.survival_integral(0.7));
}
BENCHMARK(BM_survival_integral_analytic);

void BM_survival_integral_quadrature(benchmark::State& state) {
    const Distribution dist = Distribution::pareto(1.5, 0.01);
    for (auto _ : state) benchmark::DoNotOptimize(dist.survival_integral_numeric(0.7));
}
BENCHMARK(BM_survival_integral_quadrature);

void BM_internal_value_asymmetric(benchmark::State& state) {
    const Game game(3, Distribution::uniform(), Variant::asymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(game.internal_value(0.6));
}
BENCHMARK(BM_internal_value_asymmetric);

void BM_hinterland_optimum(benchmark::State& state) {
    const Game game(3, Distribution::exponential(3.0), Variant::asymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(game.rho(0.8));
}
BENCHMARK(BM_hinterland_optimum);

void BM_canonical_pair(benchmark::State& state) {
    const Game game(3, Distribution::exponential(5.0), Variant::asymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_pair(game));
}
BENCHMARK(BM_canonical_pair);

void BM_decide_equilibrium(benchmark::State& state) {
    const Game game(5, Distribution::exponential(5.0), Variant::asymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(decide_equilibrium(game));
}
BENCHMARK(BM_decide_equilibrium);

void BM_simulate(benchmark::State& state) {
    const Game game(3, Distribution::uniform(), Variant::symmetric);
    const Profile profile({0.25, 0.5, 0.75});
    SimulationConfig config;
    config.num_clients = static_cast<std::uint64_t>(state.range(0));
    config.variant = game.variant();
    for (auto _ : state) benchmark::DoNotOptimize(simulate_utilities(game, profile, config));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_simulate)->Arg(10'000)->Arg(100'000);

void BM_best_response_grid(benchmark::State& state) {
    const Game game(3, Distribution::exponential(5.0), Variant::asymmetric);
    const Profile profile({0.25, 0.5, 0.75});
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_best_response(game, profile, 1, 1e-2));
}
BENCHMARK(BM_best_response_grid);

}  // namespace

BENCHMARK_MAIN();
