#include "fixtures.hpp"

#include <wavecons/conslaws.hpp>
#include <wavecons/error.hpp>
#include <wavecons/grid.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wavecons;

namespace {

Jet2 random_jet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    Jet2 j;
    j.u = U(rng);
    j.ut = U(rng);
    j.ux = U(rng);
    j.utt = U(rng);
    j.utx = U(rng);
    j.uxx = U(rng);
    return j;
}

CaseSpec constant_case(CaseTag tag) {
    CaseSpec s;
    s.tag = tag;
    s.nonlin = nonlinear::cubic();
    return s;
}

}  // namespace

TEST(BuildLaw, MomentumAtTimeZero) {
    CaseSpec s = constant_case(CaseTag::P1_i);
    s.params.a = 1.0;
    ConservationLaw L = build_law(s, LawSelector::momentum);
    Jet2 j;
    j.ut = 2.0;
    j.ux = 3.0;
    EXPECT_DOUBLE_EQ(L.T(0.0, 0.0, j), 6.0);
    EXPECT_FALSE(L.source_tag.empty());
}

TEST(BuildLaw, UndampedReductions) {
    std::mt19937_64 rng(7);
    const double c = 1.4;
    CaseSpec m = constant_case(CaseTag::P1_i);
    m.c = c;
    m.params.a = 0.0;
    CaseSpec e = constant_case(CaseTag::P1_ii);
    e.c = c;
    e.params.a = 0.0;
    e.params.ctilde = 0.0;
    ConservationLaw P = build_law(m, LawSelector::momentum);
    ConservationLaw E = build_law(e, LawSelector::energy);
    for (int i = 0; i < 200; ++i) {
        Jet2 j = random_jet(rng);
        double t = 2.0 * i / 200.0, x = -3.0 + 0.03 * i;
        double G = 0.25 * j.u * j.u * j.u * j.u;
        EXPECT_NEAR(P.T(t, x, j), j.ut * j.ux, 1e-14);
        EXPECT_NEAR(E.T(t, x, j), 0.5 * (j.ut * j.ut + c * c * j.ux * j.ux) + G, 1e-13);
        for (int sign : {1, -1}) {
            CaseSpec n = constant_case(CaseTag::P1_iii);
            n.c = c;
            n.params.a = 0.0;
            n.params.b = 0.0;
            n.params.sign = sign;
            ConservationLaw N = build_law(n, LawSelector::null_energy);
            double q = j.ut - sign * c * j.ux;
            EXPECT_NEAR(N.T(t, x, j), 0.5 * q * q + G, 1e-13);
            EXPECT_NEAR(N.Q(t, x, j), q, 1e-14);
        }
    }
}

TEST(BuildLaw, UnsupportedSelector) {
    CaseSpec s = constant_case(CaseTag::P1_i);
    s.params.a = 1.0;
    EXPECT_THROW(build_law(s, LawSelector::energy), ValidationError);
    EXPECT_FALSE(parse_law_selector("entropy").has_value());
    for (LawSelector l : supported_laws(CaseTag::COR1)) EXPECT_EQ(parse_law_selector(to_string(l)), l);
}

TEST(IdentityResidual, ZeroFieldIsExact) {
    std::mt19937_64 rng(11);
    for (CaseTag tag : all_case_tags()) {
        CaseSpec s = wavecons::testing::random_case(tag, rng);
        WaveEquationSpec eq = build_equation(s);
        FieldFn zero = FieldFn::constant(0.0);
        for (LawSelector which : supported_laws(tag)) {
            ConservationLaw L = build_law(s, which);
            EXPECT_EQ(identity_residual(L, eq, zero, 0.5, 0.3, 1e-2), 0.0) << to_string(tag);
        }
    }
}

TEST(IdentityResidual, MomentumRichardsonRatio) {
    CaseSpec s = constant_case(CaseTag::P1_i);
    s.params.a = 1.0;
    ConservationLaw L = build_law(s, LawSelector::momentum);
    WaveEquationSpec eq = build_equation(s);
    FieldFn f = make_test_field(FieldKind::gaussian, std::vector<double>{0.8, 0.9, 0.4, 2.2});
    SampleBox box;
    IdentityReport r = check_identity(L, eq, f, box.points(), 1e-2);
    EXPECT_NEAR(r.norms[0] / r.norms[1], 4.0, 0.05);
    EXPECT_GE(r.order(), 1.9);
    EXPECT_LE(r.order(), 2.1);
}

TEST(IdentityResidual, WrongLawDoesNotConverge) {
    // Momentum law of one damping rate checked against an equation with another.
    CaseSpec s = constant_case(CaseTag::P1_i);
    s.params.a = 1.0;
    CaseSpec other = s;
    other.params.a = 1.2;
    ConservationLaw L = build_law(s, LawSelector::momentum);
    FieldFn f = make_test_field(FieldKind::gaussian, std::vector<double>{0.8, 0.9, 0.4, 2.2});
    SampleBox box;
    IdentityReport r = check_identity(L, build_equation(other), f, box.points(), 1e-2);
    EXPECT_FALSE(r.passed());
}

TEST(MultiplierResidual, AllLaws) {
    std::mt19937_64 rng(3);
    for (CaseTag tag : all_case_tags()) {
        CaseSpec s = wavecons::testing::random_case(tag, rng, 1.2);
        for (LawSelector which : supported_laws(tag)) {
            ConservationLaw L = build_law(s, which);
            for (int i = 0; i < 20; ++i) {
                Jet2 j = random_jet(rng);
                double t = 0.1 + 0.09 * i, x = -2.0 + 0.2 * i;
                double scale = 1.0 + std::abs(L.Q(t, x, j));
                EXPECT_LE(multiplier_residual(L, t, x, j), 1e-6 * scale) << to_string(tag);
            }
        }
    }
}

TEST(NullCombination, SpecExamples) {
    CaseSpec s = constant_case(CaseTag::COR1);
    s.params.alpha = 0.0;
    s.nonlin = nonlinear::zero();
    Jet2 j;
    j.u = 1.0;
    j.ut = 1.0;
    j.ux = 1.0;
    EXPECT_NEAR(null_combination_residual(s, 0.0, 0.0, j, 1), 0.0, 1e-15);

    s.params.alpha = 2.0;
    Jet2 k;
    k.u = 1.0;
    k.ut = 1.0;
    EXPECT_NEAR(null_combination_residual(s, 0.0, 0.0, k, 1), 0.0, 1e-14);
    EXPECT_NEAR(null_combination_residual(s, 0.0, 0.0, k, -1), 0.0, 1e-14);
}

TEST(DensityIntegral, ZeroVelocity) {
    GridState g = sample_state(-10, 10, 256, BoundaryCondition::periodic, [](double x) { return std::sin(x); },
                               [](double) { return 0.0; });
    JetFn P{[](double, double, const Jet2& j) { return j.ut * j.ux; }, "P"};
    EXPECT_EQ(density_integral(P, g, 0.0), 0.0);
}

TEST(DensityIntegral, OddIntegrandVanishes) {
    GridState g = sample_state(-10, 10, 512, BoundaryCondition::dirichlet_zero,
                               [](double x) { return std::exp(-x * x); },
                               [](double x) { return std::cos(x) * std::exp(-x * x); });
    JetFn P{[](double, double, const Jet2& j) { return j.ut * j.ux; }, "P"};
    EXPECT_NEAR(density_integral(P, g, 0.0), 0.0, 1e-12);
}

TEST(DensityIntegral, GaussianClosedForm) {
    GridState g = sample_state(-10, 10, 2048, BoundaryCondition::periodic, [](double) { return 0.0; },
                               [](double x) { return std::exp(-x * x); });
    JetFn K{[](double, double, const Jet2& j) { return 0.5 * j.ut * j.ut; }, "K"};
    EXPECT_NEAR(density_integral(K, g, 0.0), 0.5 * std::sqrt(std::numbers::pi / 2.0), 1e-8);
}

TEST(DensityIntegral, TooFewNodes) {
    GridState g;
    g.u.assign(4, 0.0);
    g.ut.assign(4, 0.0);
    JetFn K{[](double, double, const Jet2& j) { return j.ut; }, "K"};
    EXPECT_THROW(density_integral(K, g, 0.0), ValidationError);
}

TEST(KNormalization, DisplayVariantSelectedAwayFromUnitSpeed) {
    std::mt19937_64 rng(5);
    CaseSpec s = wavecons::testing::random_case(CaseTag::P2_iii, rng, 1.5);
    FieldFn f = wavecons::testing::test_fields(1.5)[0];
    SampleBox box = wavecons::testing::sample_box_for(CaseTag::P2_iii);
    VariantSelection sel = select_k_normalization(s, f, box.points(), 1e-2);
    ASSERT_TRUE(sel.found);
    EXPECT_EQ(sel.law.variant, "k2=2");
    ASSERT_EQ(sel.orders.size(), 2u);
    EXPECT_LT(sel.orders[1].second, 1.0);
}

TEST(SplitIdentity, EnergyMomentumEqualsNullBrackets) {
    std::mt19937_64 rng(13);
    CaseSpec s = wavecons::testing::random_case(CaseTag::P2_iv, rng);
    ConservationLaw W = build_law(s, LawSelector::energy_momentum);
    for (int i = 0; i < 50; ++i) {
        Jet2 j = random_jet(rng);
        double t = 0.1 + 0.03 * i, x = -2.0 + 0.08 * i;
        double scale = 1.0 + std::abs(W.T(t, x, j));
        EXPECT_LE(std::abs(energy_momentum_split_residual(s, t, x, j)), 1e-12 * scale);
    }
}
