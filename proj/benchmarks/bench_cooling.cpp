#include <cmath>

#include <benchmark/benchmark.h>

#include "flexcool/constants.hpp"
#include "flexcool/cooling_model.hpp"
#include "flexcool/lindblad_oracle.hpp"

namespace cm = flexcool::cooling_model;
namespace lo = flexcool::lindblad_oracle;

static void BM_SteadyPhononFull(benchmark::State& state) {
    const auto params = cm::reference_baseline();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cm::steady_phonon_full(params));
    }
}
BENCHMARK(BM_SteadyPhononFull);

static void BM_QfGrid(benchmark::State& state) {
    auto params = cm::reference_baseline();
    params.osc.temperature_T = 4.2;
    const auto side = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < side; ++i) {
            for (int j = 0; j < side; ++j) {
                const double q = 1e3 * std::pow(1e4, i / double(side - 1));
                const double f = 1e3 * std::pow(1e4, j / double(side - 1));
                acc += cm::steady_phonon_full(cm::rescale_oscillator(params, flexcool::angular(f), q)).n_steady;
            }
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_QfGrid)->Arg(41)->Arg(101);

// Tridiagonal steady state at the baseline truncation (~10⁴ levels).
static void BM_SteadyPopulations(benchmark::State& state) {
    const auto params = cm::reference_baseline();
    const auto chain = cm::coupling_chain(params);
    lo::OracleConfig cfg;
    cfg.g = chain.gN;
    cfg.tau = chain.tau;
    cfg.gamma = flexcool::bec_trap::transition_rate(params.detuning_delta, params.mu_c, chain.rabi_Omega);
    cfg.kappa = cm::decay_rate(params.osc.omega_m, params.osc.quality_Q);
    cfg.n_th = cm::thermal_phonon_number(params.osc.omega_m, params.osc.temperature_T);
    cfg.n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lo::mean_phonon(lo::steady_populations(cfg)));
    }
}
BENCHMARK(BM_SteadyPopulations)->Arg(10'460)->Arg(100'000);

static void BM_KrausMap(benchmark::State& state) {
    const auto p = lo::PopulationVector::thermal(100.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lo::jc_kraus_map(p, 1.0e3, 1.0e-3));
    }
}
BENCHMARK(BM_KrausMap)->Arg(1'000)->Arg(10'000);

BENCHMARK_MAIN();
