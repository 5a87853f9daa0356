#include <wavecons/error.hpp>
#include <wavecons/jetcalc.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace wavecons;

namespace {

FieldFn poly(std::vector<double> co) { return make_test_field(FieldKind::polynomial, co); }

}  // namespace

TEST(EvalField, GaussianCenterIsCriticalPoint) {
    std::vector<double> p{1.7, 0.3, -0.4, 0.9};
    Jet2 j = eval_field(make_test_field(FieldKind::gaussian, p), 0.3, -0.4);
    EXPECT_DOUBLE_EQ(j.u, 1.7);
    EXPECT_DOUBLE_EQ(j.ut, 0.0);
    EXPECT_DOUBLE_EQ(j.ux, 0.0);
}

TEST(EvalField, SineTravelingWave) {
    // sin(x - t) as A sin(kt t + kx x + phase)
    std::vector<double> p{1.0, -1.0, 1.0, 0.0};
    Jet2 j = eval_field(make_test_field(FieldKind::sinusoid, p), 0.0, 0.0);
    EXPECT_NEAR(j.u, 0.0, 1e-15);
    EXPECT_NEAR(j.ut, -1.0, 1e-15);
    EXPECT_NEAR(j.ux, 1.0, 1e-15);
    EXPECT_NEAR(j.utt, 0.0, 1e-15);
    EXPECT_NEAR(j.uxx, 0.0, 1e-15);
}

TEST(EvalField, PolynomialTSquaredX) {
    // graded order: 1, t, x, t^2, tx, x^2, t^3, t^2 x, ...
    std::vector<double> co(10, 0.0);
    co[7] = 1.0;
    Jet2 j = eval_field(poly(co), 1.0, 2.0);
    EXPECT_DOUBLE_EQ(j.u, 2.0);
    EXPECT_DOUBLE_EQ(j.ut, 4.0);
    EXPECT_DOUBLE_EQ(j.ux, 1.0);
    EXPECT_DOUBLE_EQ(j.utt, 4.0);
    EXPECT_DOUBLE_EQ(j.utx, 2.0);
    EXPECT_DOUBLE_EQ(j.uxx, 0.0);
}

TEST(EvalField, OrderBeyondCapabilityThrows) {
    FieldFn f = FieldFn::constant(1.0, 1);
    EXPECT_THROW(eval_field(f, 0.0, 0.0), CapabilityError);
    FieldFn g = make_test_field(FieldKind::gaussian, std::vector<double>{1, 0, 0, 1});
    EXPECT_THROW(g(0.0, 0.0, 4, 2), CapabilityError);
}

TEST(TotalDerivative, SpaceDerivativeOfSine) {
    std::vector<double> p{1.0, 0.0, 1.0, 0.0};
    FieldFn f = make_test_field(FieldKind::sinusoid, p);
    JetFn F{[](double, double, const Jet2& j) { return j.u; }, "u"};
    EXPECT_NEAR(total_derivative(F, f, Direction::space, 0.0, 0.0, 1e-3), 1.0, 1e-6);
}

TEST(TotalDerivative, MomentumDensityAtBumpCenter) {
    std::vector<double> p{1.0, 0.5, 0.25, 0.8};
    FieldFn f = make_test_field(FieldKind::gaussian, p);
    JetFn F{[](double, double, const Jet2& j) { return j.ut * j.ux; }, "P"};
    for (double h : {1e-2, 5e-3}) {
        EXPECT_NEAR(total_derivative(F, f, Direction::time, 0.5, 0.25, h), 0.0, 10 * h * h);
    }
}

TEST(TotalDerivative, NonFiniteReportsCoordinates) {
    FieldFn f([](double, double, int, int) { return std::numeric_limits<double>::quiet_NaN(); }, 4, "nan");
    JetFn F{[](double, double, const Jet2& j) { return j.u; }, "u"};
    try {
        total_derivative(F, f, Direction::time, 0.25, 1.5, 1e-3);
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("1.5"), std::string::npos);
    }
}

TEST(TestFields, TravelingFieldIsNull) {
    for (int sign : {1, -1}) {
        std::vector<double> p{1.3, static_cast<double>(sign), 1.0, 0.0, 1.0};
        FieldFn f = make_test_field(FieldKind::traveling, p);
        for (double t : {0.0, 0.7}) {
            for (double x : {-1.0, 0.2, 1.4}) {
                EXPECT_NEAR(f(t, x, 2, 0) - 1.3 * 1.3 * f(t, x, 0, 2), 0.0, 1e-13);
            }
        }
    }
}

TEST(TestFields, PolynomialTSquared) {
    std::vector<double> co(6, 0.0);
    co[3] = 1.0;
    FieldFn f = poly(co);
    for (double t : {-1.0, 0.0, 2.5}) EXPECT_DOUBLE_EQ(f(t, 0.3, 2, 0), 2.0);
}

TEST(TestFields, InvalidParamsRejected) {
    EXPECT_THROW(make_test_field(FieldKind::gaussian, std::vector<double>{1, 0, 0, 0}), ValidationError);
    EXPECT_THROW(make_test_field(FieldKind::sinusoid, std::vector<double>{1, 0}), ValidationError);
    EXPECT_THROW(make_test_field(FieldKind::polynomial, std::vector<double>(29, 1.0)), ValidationError);
}

TEST(TestFields, PartialsMatchFiniteDifferences) {
    const double h = 1e-4;
    for (const FieldFn& f : standard_test_fields(1.3)) {
        for (auto [t, x] : {std::pair{0.3, -0.7}, std::pair{1.1, 0.4}}) {
            for (int dt = 0; dt < 3; ++dt) {
                for (int dx = 0; dt + dx < 3; ++dx) {
                    double fdt = (f(t + h, x, dt, dx) - f(t - h, x, dt, dx)) / (2 * h);
                    double fdx = (f(t, x + h, dt, dx) - f(t, x - h, dt, dx)) / (2 * h);
                    EXPECT_NEAR(f(t, x, dt + 1, dx), fdt, 1e-6) << f.name() << " " << dt << dx;
                    EXPECT_NEAR(f(t, x, dt, dx + 1), fdx, 1e-6) << f.name() << " " << dt << dx;
                }
            }
        }
    }
}

TEST(EstimateOrder, GeometricSequence) {
    OrderEstimate e = estimate_order(4e-4, 1e-4, 2.5e-5);
    EXPECT_FALSE(e.exact);
    EXPECT_NEAR(e.order, 2.0, 1e-12);
    OrderEstimate d = estimate_decay_order(4e-4, 1e-4, 2.5e-5);
    EXPECT_NEAR(d.order, 2.0, 1e-12);
}

TEST(EstimateOrder, AllZeroIsExact) {
    EXPECT_TRUE(estimate_order(0.0, 0.0, 0.0).exact);
    EXPECT_TRUE(estimate_decay_order(0.0, 0.0, 0.0).exact);
}

TEST(SampleBox, PointCount) {
    SampleBox b;
    b.nt = 3;
    b.nx = 4;
    auto p = b.points();
    ASSERT_EQ(p.size(), 12u);
    EXPECT_DOUBLE_EQ(p.front().first, b.t_min);
    EXPECT_DOUBLE_EQ(p.back().second, b.x_max);
}
