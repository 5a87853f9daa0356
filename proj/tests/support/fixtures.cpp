#include "fixtures.hpp"

#include <wavecons/error.hpp>

#include <array>
#include <cmath>

namespace wavecons::testing {

NonlinearFn mixed_nonlinear() {
    return make_nonlinear([](double y, double w) { return w * w * w + 0.2 * std::sin(y) * w; },
                          [](double y, double w) { return 0.25 * w * w * w * w + 0.1 * std::sin(y) * w * w; },
                          "mixed");
}

std::vector<FieldFn> test_fields(double c) { return standard_test_fields(c); }

FieldFn random_polynomial(std::mt19937_64& rng, double size, bool t_only) {
    std::uniform_real_distribution<double> U(-size, size);
    // Graded order up to degree 4: 15 coefficients.
    std::vector<double> co(15, 0.0);
    int idx = 0;
    for (int deg = 0; deg <= 4; ++deg) {
        for (int tx = 0; tx <= deg; ++tx, ++idx) {
            // term t^{deg - tx} x^{tx}
            if (deg == 0) continue;
            if (t_only && tx > 0) continue;
            co[idx] = U(rng) / static_cast<double>(deg);
        }
    }
    return make_test_field(FieldKind::polynomial, co);
}

namespace {

int random_sign(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

NonlinearFn random_nonlinear(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return nonlinear::cubic();
        case 1: return nonlinear::sine();
        default: return mixed_nonlinear();
    }
}

}  // namespace

CaseSpec random_case(CaseTag tag, std::mt19937_64& rng, double c, int ode_steps) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto range = [&](double lo, double hi) { return lo + (hi - lo) * U(rng); };
    CaseSpec s;
    s.tag = tag;
    s.c = c;
    switch (tag) {
        case CaseTag::P1_i:
            s.params.a = range(0.2, 1.5);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::P1_ii:
            s.params.a = range(0.2, 1.2);
            s.params.ctilde = range(0.3, 0.9) * random_sign(rng);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::P1_iii:
            s.params.a = range(0.1, 1.0);
            s.params.b = range(-0.3, 0.3);
            s.params.sign = random_sign(rng);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::COR1:
        case CaseTag::TABLE1_row1:
            s.params.alpha = range(0.2, 1.2);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::TABLE1_row2:
            s.params.alpha = range(0.2, 1.0);
            s.params.ctilde = range(0.5, 1.5) * random_sign(rng);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::TABLE1_row3: {
            // Exponent 1 - 4 s c b / alpha restricted to 1 or 3 so that |u|^m is smooth.
            double al = range(0.2, 1.0);
            int sg = random_sign(rng);
            double m = std::bernoulli_distribution(0.5)(rng) ? 1.0 : 3.0;
            s.params.alpha = al;
            s.params.sign = sg;
            s.params.b = -sg * al * (m - 1.0) / (4.0 * c);
            s.nonlin = random_nonlinear(rng);
            break;
        }
        case CaseTag::POWERLAW:
            s.params.alpha = range(0.2, 1.0);
            s.params.k = range(0.5, 2.0);
            s.params.p = std::bernoulli_distribution(0.5)(rng) ? 1.0 : 3.0;
            break;
        case CaseTag::P2_i:
        case CaseTag::P2_ii:
            s.profiles.a = random_polynomial(rng, 0.5, true);
            s.nonlin = random_nonlinear(rng);
            break;
        case CaseTag::P2_iii: {
            FieldFn a = random_polynomial(rng, 0.08);
            int sg = random_sign(rng);
            s.params.sign = sg;
            s.profiles.a = a;
            s.profiles.k = characteristic_field(build_k_problem(a, KCase::case3, sg, c), ode_steps);
            s.nonlin = random_nonlinear(rng);
            break;
        }
        case CaseTag::P2_iv: {
            FieldFn a = random_polynomial(rng, 0.08);
            s.profiles.a = a;
            s.profiles.k = characteristic_field(build_k_problem(a, KCase::case4, 1, c), ode_steps);
            s.profiles.b = characteristic_field(build_b_problem(a, c), ode_steps);
            s.profiles.b0 = characteristic_field(build_b0_problem(a, c), ode_steps);
            s.nonlin = random_nonlinear(rng);
            break;
        }
        case CaseTag::NULLFORM: {
            int sg = random_sign(rng);
            std::array<double, 4> sp{range(0.1, 0.3), range(-0.8, 0.8), range(-0.8, 0.8), range(0.0, 3.0)};
            FieldFn alpha = field_sum(FieldFn::constant(range(-0.4, 0.4)), make_test_field(FieldKind::sinusoid, sp));
            double k0 = range(-0.3, 0.3);
            s.params.sign = sg;
            s.profiles.alpha = alpha;
            s.profiles.kappa = characteristic_field(
                build_kappa_problem(alpha, sg, c, [k0](double x) { return k0 * std::cos(0.5 * x); }), ode_steps);
            s.nonlin = random_nonlinear(rng);
            break;
        }
    }
    return s;
}

SampleBox sample_box_for(CaseTag tag) {
    SampleBox b;
    if (tag == CaseTag::P2_iii || tag == CaseTag::P2_iv || tag == CaseTag::NULLFORM) {
        b.nt = 5;
        b.nx = 6;
        b.t_min = 0.1;
    }
    return b;
}

}  // namespace wavecons::testing
