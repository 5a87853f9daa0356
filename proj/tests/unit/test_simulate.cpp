#include <wavecons/csv.hpp>
#include <wavecons/error.hpp>
#include <wavecons/simulate.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace wavecons;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CaseSpec overlap(double alpha, NonlinearFn h, double c = 1.0) {
    CaseSpec s;
    s.tag = CaseTag::COR1;
    s.c = c;
    s.params.alpha = alpha;
    s.nonlin = std::move(h);
    return s;
}

GridState gaussian_data(int n, BoundaryCondition bc = BoundaryCondition::periodic) {
    return sample_state(-20, 20, static_cast<std::size_t>(n), bc,
                        [](double x) { return 0.8 * std::exp(-x * x / 2.0); },
                        [](double x) { return 0.8 * x * std::exp(-x * x / 2.0); });
}

GridState sine_data(int n) {
    return sample_state(0, kTwoPi, static_cast<std::size_t>(n), BoundaryCondition::periodic,
                        [](double x) { return std::sin(x); }, [](double) { return 0.0; });
}

Probe momentum_probe(double rate) {
    return {"P", {[](double, double, const Jet2& j) { return j.ut * j.ux; }, "P"}, rate};
}

double max_sine_error(int n, int order) {
    WaveEquationSpec eq = build_equation(overlap(0.0, nonlinear::zero()));
    GridState g = sine_data(n);
    Rhs r = semidiscrete_rhs(g, eq, order);
    double e = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) e = std::max(e, std::abs(r.dut[i] + std::sin(g.x(i))));
    return e;
}

}  // namespace

TEST(Rhs, LaplacianOfSine) {
    EXPECT_LE(max_sine_error(64, 2), 2e-3);
    EXPECT_LE(max_sine_error(64, 4), 1e-5);
    GridState g = sine_data(64);
    Rhs r = semidiscrete_rhs(g, build_equation(overlap(0.0, nonlinear::zero())), 4);
    EXPECT_EQ(r.du, g.ut);
}

TEST(Rhs, FourthOrderRefinement) {
    EXPECT_GE(max_sine_error(32, 4) / max_sine_error(64, 4), 14.0);
    EXPECT_LE(max_sine_error(32, 4) / max_sine_error(64, 4), 18.0);
}

TEST(Rhs, ConstantStateSeesOnlyInteraction) {
    CaseSpec s;
    s.tag = CaseTag::P1_i;
    s.params.a = 1.0;
    s.nonlin = nonlinear::cubic();
    GridState g = sample_state(-5, 5, 32, BoundaryCondition::periodic, [](double) { return 0.5; },
                               [](double) { return 0.0; });
    Rhs r = semidiscrete_rhs(g, build_equation(s), 4);
    for (double v : r.dut) EXPECT_NEAR(v, -0.125, 1e-15);
}

TEST(Rhs, NonFiniteInteractionNamesNode) {
    WaveEquationSpec eq = build_equation(overlap(0.0, nonlinear::zero()));
    eq.g = [](double, double x, double, double, double) { return x > 1.0 ? NAN : 0.0; };
    try {
        semidiscrete_rhs(sine_data(32), eq, 4);
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("node"), std::string::npos);
    }
}

TEST(Run, LinearEnergyDrift) {
    SimConfig cfg;
    cfg.equation = overlap(0.0, nonlinear::zero());
    cfg.laws = {LawSelector::energy};
    cfg.cfl = 0.5;
    DiagnosticsSeries s = rk4_run(cfg, sine_data(1024));
    EXPECT_LE(relative_drift(s.I[0]), 1e-8);
}

TEST(Run, MomentumHalvesAtLogTwoDamping) {
    const double al = std::numbers::ln2;
    SimConfig cfg;
    cfg.equation = overlap(al, nonlinear::zero());
    cfg.t_end = 1.0;
    cfg.probes = {momentum_probe(al)};
    DiagnosticsSeries s = rk4_run(cfg, gaussian_data(1024));
    const auto& P = s.probe[0];
    EXPECT_NEAR(s.t.back(), 1.0, 1e-12);
    EXPECT_NEAR(P.back() / P.front(), 0.5, 1e-4);
    EXPECT_NEAR(fit_exponent(s.t, P), -al, 1e-3);
}

TEST(Run, WeightedMomentumDrift) {
    CaseSpec c;
    c.tag = CaseTag::P1_i;
    c.params.a = 1.0;
    c.nonlin = nonlinear::cubic();
    SimConfig cfg;
    cfg.equation = c;
    cfg.laws = {LawSelector::momentum};
    DiagnosticsSeries s = rk4_run(cfg, gaussian_data(2048));
    EXPECT_LE(relative_drift(s.I[0]), 1e-6);
}

TEST(Run, CflValidatedBeforeStepping) {
    SimConfig cfg;
    cfg.equation = overlap(0.5, nonlinear::cubic());
    cfg.cfl = 1.5;
    EXPECT_THROW(rk4_run(cfg, gaussian_data(64)), ValidationError);
    cfg.cfl = 0.0;
    EXPECT_THROW(rk4_run(cfg, gaussian_data(64)), ValidationError);
}

TEST(Run, WeightedLawsNeedDirichletMargin) {
    CaseSpec s;
    s.tag = CaseTag::P1_iii;
    s.params.a = 0.3;
    s.params.b = 0.1;
    s.params.sign = 1;
    s.nonlin = nonlinear::cubic();
    SimConfig cfg;
    cfg.equation = s;
    cfg.laws = {LawSelector::null_energy};
    EXPECT_THROW(rk4_run(cfg, gaussian_data(256)), ValidationError);
    GridState wide = sample_state(-6, 6, 256, BoundaryCondition::dirichlet_zero,
                                  [](double x) { return std::exp(-x * x); }, [](double) { return 0.0; });
    EXPECT_THROW(rk4_run(cfg, wide), ValidationError);
    EXPECT_NO_THROW(rk4_run(cfg, gaussian_data(512, BoundaryCondition::dirichlet_zero)));
}

TEST(Run, BlowUpReportsTime) {
    SimConfig cfg;
    cfg.equation = overlap(0.0, nonlinear::linear(-100.0));
    cfg.t_end = 3.0;
    try {
        rk4_run(cfg, gaussian_data(128));
        FAIL();
    } catch (const BlowUpError& e) {
        EXPECT_GT(e.time(), 1.0);
        EXPECT_LT(e.time(), 3.0);
    }
}

TEST(Run, Deterministic) {
    SimConfig cfg;
    cfg.equation = overlap(0.5, nonlinear::cubic());
    cfg.laws = {LawSelector::momentum, LawSelector::energy};
    std::ostringstream a, b;
    write_series(a, rk4_run(cfg, gaussian_data(256)));
    write_series(b, rk4_run(cfg, gaussian_data(256)));
    EXPECT_EQ(a.str(), b.str());
}

TEST(Run, RecordEvery) {
    SimConfig cfg;
    cfg.equation = overlap(0.5, nonlinear::cubic());
    cfg.laws = {LawSelector::energy};
    cfg.record_every = 7;
    GridState g = gaussian_data(128);
    DiagnosticsSeries s = rk4_run(cfg, g);
    int steps = step_count(cfg, g.dx, 1.0);
    EXPECT_EQ(s.records(), static_cast<std::size_t>(steps / 7 + 1 + (steps % 7 ? 1 : 0)));
    EXPECT_NEAR(s.t.back(), cfg.t_end, 1e-12);
}

TEST(FitExponent, ExactExponential) {
    std::vector<double> t, y;
    for (int i = 0; i <= 20; ++i) {
        t.push_back(0.1 * i);
        y.push_back(-3.0 * std::exp(-0.7 * t.back()));
    }
    EXPECT_NEAR(fit_exponent(t, y), -0.7, 1e-12);
}

TEST(Convergence, SecondAndFourthOrder) {
    SimConfig cfg;
    cfg.equation = overlap(0.5, nonlinear::cubic());
    cfg.laws = {LawSelector::energy};
    for (int order : {2, 4}) {
        cfg.spatial_order = order;
        ConvergenceReport r = convergence_study(cfg, [](int n) { return gaussian_data(n); }, 256, 3);
        ASSERT_EQ(r.drift_order.size(), 1u);
        EXPECT_FALSE(r.inconclusive[0]);
        EXPECT_NEAR(r.drift_order[0].order, order, 0.15);
    }
}

TEST(Convergence, SymmetricLawIsExact) {
    // A standing sine has zero momentum at every resolution.
    SimConfig cfg;
    cfg.equation = overlap(0.0, nonlinear::zero());
    cfg.laws = {LawSelector::momentum};
    ConvergenceReport r = convergence_study(cfg, sine_data, 32, 3);
    EXPECT_TRUE(r.drift_order[0].exact);
}

TEST(Convergence, NeedsThreeLevels) {
    SimConfig cfg;
    cfg.equation = overlap(0.5, nonlinear::cubic());
    EXPECT_THROW(convergence_study(cfg, [](int n) { return gaussian_data(n); }, 64, 2), ValidationError);
}
