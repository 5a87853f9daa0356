#include "fixtures.hpp"

#include <wavecons/conslaws.hpp>
#include <wavecons/error.hpp>
#include <wavecons/transforms.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace wavecons;

namespace {

CaseSpec p1_i(double a, NonlinearFn n) {
    CaseSpec s;
    s.tag = CaseTag::P1_i;
    s.params.a = a;
    s.nonlin = std::move(n);
    return s;
}

FieldFn gaussian() { return make_test_field(FieldKind::gaussian, std::vector<double>{0.8, 0.9, 0.4, 2.2}); }

FieldFn poly(std::vector<double> co) { return make_test_field(FieldKind::polynomial, co); }

double equivalence_norm(const PointMap& m, const FieldFn& f, double h) {
    double sum = 0.0;
    for (auto [t, x] : SampleBox{}.points()) sum += std::abs(equivalence_residual(m, f, t, x, h));
    return sum;
}

}  // namespace

TEST(MapToUndamped, ConstantDampingImage) {
    const double a = 1.0;
    PointMap m = map_to_undamped(p1_i(a, nonlinear::cubic()));
    for (double t : {0.0, 0.8, 1.7}) {
        for (double v : {-0.9, 0.4}) {
            double e = std::exp(0.5 * a * t);
            double want = e * std::pow(v / e, 3) - 0.25 * a * a * v;
            EXPECT_NEAR(m.image_eq(t, 0.2, v, 0.0), want, 1e-14);
            // No first-order term survives.
            EXPECT_DOUBLE_EQ(m.image_eq(t, 0.2, v, 3.0), m.image_eq(t, 0.2, v, -2.0));
        }
    }
}

TEST(MapToUndamped, LinearInteraction) {
    const double a = 1.4, k = 0.7;
    PointMap m = map_to_undamped(p1_i(a, nonlinear::linear(k)));
    EXPECT_NEAR(m.image_eq(0.6, 0.0, 0.5, 0.0), (k - a * a / 4.0) * 0.5, 1e-14);
}

TEST(MapToUndamped, NullDampingImage) {
    const double c = 1.3, a = 0.6, b = 0.25;
    NonlinearFn n = wavecons::testing::mixed_nonlinear();
    for (int sign : {1, -1}) {
        CaseSpec s;
        s.tag = CaseTag::P1_iii;
        s.c = c;
        s.params.a = a;
        s.params.b = b;
        s.params.sign = sign;
        s.nonlin = n;
        PointMap m = map_to_undamped(s);
        for (double t : {0.0, 0.9}) {
            for (double x : {-1.0, 0.7}) {
                double v = 0.6;
                double want = n(x + sign * c * t, v) * std::exp(2.0 * sign * c * b * t);
                EXPECT_NEAR(m.image_eq(t, x, v, 0.0), want, 1e-13);
            }
        }
        EXPECT_NEAR(m.phi(1.0, 0.0, 1, 0), 0.5 * (a + sign * c * b), 1e-15);
    }
}

TEST(MapToUndamped, IntrinsicDampingRejected) {
    std::vector<double> co(10, 0.0);
    co[7] = 0.1;  // a = t^2 x / 10: a_ttx = 0.2, a_xxx = 0
    CaseSpec s;
    s.tag = CaseTag::P2_iii;
    s.params.sign = 1;
    s.profiles.a = poly(co);
    s.profiles.k = FieldFn::constant(0.0);
    s.nonlin = nonlinear::cubic();
    EXPECT_THROW(map_to_undamped(s), IntrinsicDampingError);
}

TEST(MapToUndamped, NullFormRejected) {
    std::mt19937_64 rng(1);
    EXPECT_THROW(map_to_undamped(wavecons::testing::random_case(CaseTag::NULLFORM, rng)), ValidationError);
}

TEST(PushState, ZeroPhaseIsIdentity) {
    GridState g = sample_state(-5, 5, 64, BoundaryCondition::periodic, [](double x) { return std::sin(x); },
                               [](double x) { return std::cos(2 * x); });
    GridState v = push_state(g, FieldFn::constant(0.0), 0.0);
    EXPECT_EQ(v.u, g.u);
    EXPECT_EQ(v.ut, g.ut);
}

TEST(PushState, LinearPhaseAtTimeZero) {
    GridState g = sample_state(-5, 5, 64, BoundaryCondition::periodic, [](double x) { return std::sin(x); },
                               [](double x) { return std::cos(2 * x); });
    PointMap m = map_to_undamped(p1_i(2.0, nonlinear::cubic()));
    GridState v = push_state(g, m.phi, 0.0);
    for (std::size_t i = 0; i < g.n(); ++i) {
        EXPECT_DOUBLE_EQ(v.u[i], g.u[i]);
        EXPECT_NEAR(v.ut[i], g.ut[i] + g.u[i], 1e-15);
    }
}

TEST(PushState, RoundTrip) {
    GridState g = sample_state(-5, 5, 128, BoundaryCondition::periodic,
                               [](double x) { return std::exp(-x * x) + 0.1; },
                               [](double x) { return x * std::exp(-x * x) - 0.2; });
    std::vector<double> co{0.1, 0.3, -0.2, 0.05, 0.1, 0.02};
    FieldFn phi = poly(co);
    GridState back = pull_state(push_state(g, phi, 0.7), phi, 0.7);
    for (std::size_t i = 0; i < g.n(); ++i) {
        EXPECT_NEAR(back.u[i], g.u[i], 1e-14 * std::abs(g.u[i]));
        EXPECT_NEAR(back.ut[i], g.ut[i], 1e-14 * (std::abs(g.ut[i]) + std::abs(g.u[i])));
    }
}

TEST(PushState, OverflowGuard) {
    GridState g = sample_state(-5, 5, 16, BoundaryCondition::periodic, [](double) { return 1.0; },
                               [](double) { return 0.0; });
    EXPECT_THROW(push_state(g, FieldFn::constant(800.0), 0.0), OverflowError);
}

TEST(Equivalence, ZeroFieldVanishes) {
    PointMap m = map_to_undamped(p1_i(1.0, nonlinear::cubic()));
    EXPECT_EQ(equivalence_residual(m, FieldFn::constant(0.0), 0.4, 0.2, 1e-2), 0.0);
}

TEST(Equivalence, SecondOrderForConstantDamping) {
    PointMap m = map_to_undamped(p1_i(1.0, nonlinear::cubic()));
    double r1 = equivalence_norm(m, gaussian(), 1e-2);
    double r2 = equivalence_norm(m, gaussian(), 5e-3);
    double r3 = equivalence_norm(m, gaussian(), 2.5e-3);
    EXPECT_GE(estimate_decay_order(r1, r2, r3).order, 1.9);
}

TEST(Equivalence, ImageIsFirstOrderFree) {
    std::mt19937_64 rng(9);
    for (CaseTag tag : {CaseTag::P1_i, CaseTag::P1_ii, CaseTag::P1_iii, CaseTag::COR1, CaseTag::P2_i,
                        CaseTag::P2_ii}) {
        PointMap m = map_to_undamped(wavecons::testing::random_case(tag, rng));
        for (auto [t, x] : SampleBox{}.points()) {
            EXPECT_LE(vt_dependence(m, t, x, eval_field(gaussian(), t, x)), 1e-10) << to_string(tag);
        }
    }
}

TEST(Equivalence, ConformalFactorMatchesRatio) {
    std::mt19937_64 rng(4);
    PointMap m = map_to_undamped(wavecons::testing::random_case(CaseTag::P2_i, rng));
    for (double t : {0.3, 1.1}) {
        double cf = m.conformal_factor(t, 0.5);
        EXPECT_NEAR(conformal_ratio(m, gaussian(), t, 0.5), cf, 1e-10 * cf);
    }
}

TEST(NullformCorrespondence, DampingOfQuadraticProfiles) {
    const double c = 1.3;
    for (int sign : {1, -1}) {
        // a = x^2
        PointMap m = nullform_correspondence(poly({0, 0, 0, 0, 0, 1}), sign, FieldFn::constant(0.0),
                                             nonlinear::cubic(), c);
        EXPECT_NEAR((*m.image_case->profiles.alpha)(0.4, -0.3), -2.0 * c * c, 1e-14);
        // a = t x
        PointMap n = nullform_correspondence(poly({0, 0, 0, 0, 1, 0}), sign, FieldFn::constant(0.0),
                                             nonlinear::cubic(), c);
        EXPECT_NEAR((*n.image_case->profiles.alpha)(0.4, -0.3), sign * c, 1e-14);
    }
}

TEST(NullformCorrespondence, LawsConvergeOnBothSides) {
    std::mt19937_64 rng(21);
    CaseSpec s = wavecons::testing::random_case(CaseTag::P2_iii, rng);
    PointMap m = nullform_correspondence(*s.profiles.a, *s.params.sign, *s.profiles.k, s.nonlin, s.c);
    auto points = wavecons::testing::sample_box_for(CaseTag::P2_iii).points();
    ConservationLaw src = build_law(*m.source_case, LawSelector::null_energy);
    ConservationLaw img = build_law(*m.image_case, LawSelector::null_energy);
    EXPECT_TRUE(check_identity(src, m.source_eq, gaussian(), points, 1e-2).passed());
    EXPECT_TRUE(check_identity(img, m.image_eq, gaussian(), points, 1e-2).passed());
}

TEST(VLaws, DerivedPassesAltFails) {
    std::mt19937_64 rng(2);
    SampleBox box;
    for (CaseTag tag : {CaseTag::P1_i, CaseTag::P1_ii, CaseTag::P1_iii}) {
        CaseSpec s = wavecons::testing::random_case(tag, rng);
        PointMap m = map_to_undamped(s);
        ConservationLaw d = build_v_law(s, VLawVariant::derived);
        EXPECT_TRUE(check_identity(d, m.image_eq, gaussian(), box.points(), 1e-2).passed()) << to_string(tag);
        if (tag != CaseTag::P1_ii) {
            ConservationLaw p = build_v_law(s, VLawVariant::alt);
            EXPECT_FALSE(check_identity(p, m.image_eq, gaussian(), box.points(), 1e-2).passed()) << to_string(tag);
        }
    }
}
