#include <wavecons/coeffs.hpp>
#include <wavecons/conslaws.hpp>
#include <wavecons/simulate.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

using namespace wavecons;

namespace {

CaseSpec overlap_case() {
    CaseSpec s;
    s.tag = CaseTag::COR1;
    s.params.alpha = 0.5;
    s.nonlin = nonlinear::cubic();
    return s;
}

GridState gaussian_state(int n) {
    return sample_state(-20, 20, static_cast<std::size_t>(n), BoundaryCondition::periodic,
                        [](double x) { return 0.8 * std::exp(-x * x / 2.0); },
                        [](double x) { return 0.8 * x * std::exp(-x * x / 2.0); });
}

void BM_IdentityCheck(benchmark::State& state) {
    CaseSpec s = overlap_case();
    ConservationLaw L = build_law(s, LawSelector::energy);
    WaveEquationSpec eq = build_equation(s);
    FieldFn f = standard_test_fields()[0];
    SampleBox box;
    auto points = box.points();
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(L, eq, f, points, 1e-2));
}
BENCHMARK(BM_IdentityCheck)->Unit(benchmark::kMillisecond);

void BM_SemidiscreteRhs(benchmark::State& state) {
    WaveEquationSpec eq = build_equation(overlap_case());
    GridState g = gaussian_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(semidiscrete_rhs(g, eq, 4));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SemidiscreteRhs)->RangeMultiplier(4)->Range(256, 16384);

void BM_DensityIntegral(benchmark::State& state) {
    ConservationLaw L = build_law(overlap_case(), LawSelector::energy);
    GridState g = gaussian_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(density_integral(L.T, g, 0.3));
}
BENCHMARK(BM_DensityIntegral)->RangeMultiplier(4)->Range(256, 16384);

void BM_CharacteristicTrace(benchmark::State& state) {
    TransportProblem p = build_kappa_problem(FieldFn::constant(0.5), 1, 1.0, [](double x) { return std::exp(x); });
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(trace_characteristic(p, 1.5, 0.3, steps));
}
BENCHMARK(BM_CharacteristicTrace)->Arg(50)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
