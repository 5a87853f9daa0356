#include "wavecons/coeffs.hpp"

#include "wavecons/error.hpp"
#include "wavecons/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace wavecons {

double lightcone_op(const FieldFn& f, LightconeOp op, double t, double x, double c) {
    switch (op) {
        case LightconeOp::d_plus: return f(t, x, 1, 0) + c * f(t, x, 0, 1);
        case LightconeOp::d_minus: return f(t, x, 1, 0) - c * f(t, x, 0, 1);
        case LightconeOp::box: return f(t, x, 2, 0) - c * c * f(t, x, 0, 2);
    }
    return 0.0;
}

CoeffGrid::CoeffGrid(const MeshShape& s) : shape_(s) {
    if (s.nt < 4 || s.nx < 4) throw ValidationError("CoeffGrid: at least 4 nodes per axis");
    if (!(s.t_max > 0.0) || !(s.x_max > s.x_min)) throw ValidationError("CoeffGrid: empty box");
    values_.assign(static_cast<std::size_t>(s.nt) * s.nx, 0.0);
}

double CoeffGrid::dt() const { return shape_.t_max / (shape_.nt - 1); }
double CoeffGrid::dx() const { return (shape_.x_max - shape_.x_min) / (shape_.nx - 1); }

namespace {

// First node of the 4-point stencil and the Lagrange weights at s (in node units).
int stencil(double s, int n, std::array<double, 4>& w) {
    int i = static_cast<int>(std::floor(s)) - 1;
    i = std::clamp(i, 0, n - 4);
    for (int k = 0; k < 4; ++k) {
        double p = 1.0;
        for (int m = 0; m < 4; ++m) {
            if (m != k) p *= (s - (i + m)) / static_cast<double>(k - m);
        }
        w[k] = p;
    }
    return i;
}

}  // namespace

double CoeffGrid::interpolate(double t, double x) const {
    const double eps = 1e-12;
    if (t < -eps * shape_.t_max || t > shape_.t_max * (1 + eps) || x < shape_.x_min - eps ||
        x > shape_.x_max + eps) {
        std::ostringstream os;
        os << "CoeffGrid: point (t=" << t << ", x=" << x << ") outside the mesh";
        throw CoverageError(os.str());
    }
    std::array<double, 4> wt{}, wx{};
    int i0 = stencil(t / dt(), shape_.nt, wt);
    int j0 = stencil((x - shape_.x_min) / dx(), shape_.nx, wx);
    double r = 0.0;
    for (int a = 0; a < 4; ++a) {
        double row = 0.0;
        for (int b = 0; b < 4; ++b) row += wx[b] * at(i0 + a, j0 + b);
        r += wt[a] * row;
    }
    return r;
}

FieldFn CoeffGrid::as_field(std::string name) const {
    CoeffGrid g = *this;
    return FieldFn([g](double t, double x, int, int) { return g.interpolate(t, x); }, 0, std::move(name));
}

CharacteristicTrace trace_characteristic(const TransportProblem& p, double t, double x, int steps) {
    if (steps < 1) throw ValidationError("trace_characteristic: steps must be positive");
    // State (X, G, S) in tau from t down to 0: X' = speed, G' = -growth, S' = -e^G source.
    struct State {
        double X, G, S;
    };
    auto rhs = [&](double tau, const State& s) {
        return State{p.speed(tau, s.X), -p.growth(tau, s.X), -std::exp(s.G) * p.source(tau, s.X)};
    };
    auto axpy = [](const State& a, double h, const State& d) {
        return State{a.X + h * d.X, a.G + h * d.G, a.S + h * d.S};
    };
    State s{x, 0.0, 0.0};
    const double h = -t / steps;
    double tau = t;
    for (int n = 0; n < steps; ++n) {
        State k1 = rhs(tau, s);
        State k2 = rhs(tau + 0.5 * h, axpy(s, 0.5 * h, k1));
        State k3 = rhs(tau + 0.5 * h, axpy(s, 0.5 * h, k2));
        State k4 = rhs(tau + h, axpy(s, h, k3));
        s.X += h / 6.0 * (k1.X + 2 * k2.X + 2 * k3.X + k4.X);
        s.G += h / 6.0 * (k1.G + 2 * k2.G + 2 * k3.G + k4.G);
        s.S += h / 6.0 * (k1.S + 2 * k2.S + 2 * k3.S + k4.S);
        tau = t + (n + 1) * h;
    }
    double u0 = p.initial ? p.initial(s.X) : 0.0;
    CharacteristicTrace r{s.X, std::exp(s.G) * u0 + s.S};
    if (!std::isfinite(r.value) || !std::isfinite(r.foot)) {
        std::ostringstream os;
        os << p.name << ": non-finite characteristic value at (t=" << t << ", x=" << x << ")";
        throw NumericalError(os.str());
    }
    return r;
}

FieldFn characteristic_field(const TransportProblem& p, int steps) {
    if (steps < 1) throw ValidationError("characteristic_field: steps must be positive");
    return FieldFn(
        [p, steps](double t, double x, int, int) {
            if (t == 0.0) return p.initial ? p.initial(x) : 0.0;
            return trace_characteristic(p, t, x, steps).value;
        },
        0, p.name);
}

CoeffGrid solve_transport(const TransportProblem& p, const MeshShape& mesh, double ode_step) {
    if (!(ode_step > 0.0)) throw ValidationError("solve_transport: ode_step must be positive");
    CoeffGrid g(mesh);
    const double lo = mesh.x_min - p.speed_bound * mesh.t_max;
    const double hi = mesh.x_max + p.speed_bound * mesh.t_max;
    const double slack = 1e-9 * (1.0 + hi - lo);
    for (int i = 0; i < mesh.nt; ++i) {
        double t = g.t(i);
        int steps = std::max(1, static_cast<int>(std::ceil(t / ode_step - 1e-9)));
        for (int j = 0; j < mesh.nx; ++j) {
            double x = g.x(j);
            if (i == 0) {
                g.at(i, j) = p.initial ? p.initial(x) : 0.0;
                continue;
            }
            CharacteristicTrace r = trace_characteristic(p, t, x, steps);
            if (r.foot < lo - slack || r.foot > hi + slack) {
                std::ostringstream os;
                os << p.name << ": characteristic from node (" << i << ", " << j << ") at (t=" << t
                   << ", x=" << x << ") leaves the data range at x=" << r.foot;
                throw CoverageError(os.str());
            }
            g.at(i, j) = r.value;
        }
    }
    return g;
}

double coefficient_residual(const CoeffGrid& g, const TransportProblem& p, double h) {
    if (!(h > 0.0)) throw ValidationError("coefficient_residual: h must be positive");
    const MeshShape& m = g.shape();
    double worst = 0.0;
    for (int i = 1; i + 1 < m.nt; ++i) {
        for (int j = 1; j + 1 < m.nx; ++j) {
            double t = g.t(i), x = g.x(j);
            double ut = (g.interpolate(t + h, x) - g.interpolate(t - h, x)) / (2 * h);
            double ux = (g.interpolate(t, x + h) - g.interpolate(t, x - h)) / (2 * h);
            double r = ut + p.speed(t, x) * ux - p.growth(t, x) * g.at(i, j) - p.source(t, x);
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

namespace {

// Partials of a up to total order 4, d[i][j] = d_t^i d_x^j a.
struct Partials {
    std::array<std::array<double, 5>, 5> d{};
    double c = 1.0;

    Partials(const FieldFn& a, double c_, double t, double x) : c(c_) {
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) d[i][j] = a(t, x, i, j);
    }
    // d_t^i d_x^j of box a
    double B(int i, int j) const { return d[i + 2][j] - c * c * d[i][j + 2]; }
};

void require_order(const FieldFn& a, int order, const char* who) {
    if (a.max_order() < order) {
        throw CapabilityError(std::string(who) + ": a needs max_order >= " + std::to_string(order));
    }
}

// Source and growth of the derived case-(iii) k equation for sign s; speed is -s c.
struct Case3Terms {
    double growth, source;
};

Case3Terms case3_derived(const Partials& P, int s) {
    const double c = P.c;
    const auto& d = P.d;
    auto al = [&](int i, int j) { return s * c * d[i + 1][j + 1] - c * c * d[i][j + 2]; };
    double a0 = al(0, 0), at = al(1, 0), ax = al(0, 1), att = al(2, 0), axx = al(0, 2);
    double kappa_src = att - 2 * a0 * at - c * c * axx - 2 * s * c * a0 * ax;
    double B = P.B(0, 0), Bt = P.B(1, 0), Bx = P.B(0, 1);
    double Btt = P.B(2, 0), Btx = P.B(1, 1), Bxx = P.B(0, 2);
    double beta = 0.25 * B * B + 0.5 * (Bt - s * c * Bx);
    double beta_t = 0.5 * B * Bt + 0.5 * (Btt - s * c * Btx);
    double beta_x = 0.5 * B * Bx + 0.5 * (Btx - s * c * Bxx);
    return {2 * a0, beta_t - s * c * beta_x - 2 * a0 * beta + kappa_src};
}

}  // namespace

TransportProblem build_kappa_problem(const FieldFn& alpha, int sign, double c,
                                     std::function<double(double)> initial) {
    if (alpha.max_order() < 2) throw CapabilityError("build_kappa_problem: alpha needs max_order >= 2");
    if (sign != 1 && sign != -1) throw ValidationError("build_kappa_problem: sign must be +-1");
    TransportProblem p;
    const int s = sign;
    p.speed = [s, c](double, double) { return -s * c; };
    p.growth = [alpha](double t, double x) { return 2.0 * alpha(t, x); };
    p.source = [alpha, s, c](double t, double x) {
        double a = alpha(t, x), at = alpha(t, x, 1, 0), ax = alpha(t, x, 0, 1);
        double att = alpha(t, x, 2, 0), axx = alpha(t, x, 0, 2);
        return att - 2 * a * at - c * c * axx - 2 * s * c * a * ax;
    };
    p.initial = initial ? std::move(initial) : [](double) { return 0.0; };
    p.speed_bound = c;
    p.name = "kappa";
    return p;
}

std::string_view to_string(KVariant v) {
    switch (v) {
        case KVariant::derived: return "derived";
        case KVariant::alt_product: return "alt_product";
        case KVariant::alt_composed: return "alt_composed";
        case KVariant::alt_product_swapped: return "alt_product_swapped";
        case KVariant::alt_composed_swapped: return "alt_composed_swapped";
    }
    return "?";
}

std::vector<KVariant> k_variants(KCase which) {
    if (which == KCase::case4) return {KVariant::derived, KVariant::alt_product};
    return {KVariant::derived, KVariant::alt_product, KVariant::alt_composed,
            KVariant::alt_product_swapped, KVariant::alt_composed_swapped};
}

TransportProblem build_k_problem(const FieldFn& a, KCase which, int sign, double c, KVariant variant,
                                 std::function<double(double)> initial) {
    require_order(a, 4, "build_k_problem");
    if (sign != 1 && sign != -1) throw ValidationError("build_k_problem: sign must be +-1");
    TransportProblem p;
    p.initial = initial ? std::move(initial) : [](double) { return 0.0; };
    p.speed_bound = c;
    p.name = std::string(which == KCase::case3 ? "k3/" : "k4/") + std::string(to_string(variant));
    const int s = sign;

    if (which == KCase::case4) {
        p.speed = [a, c](double t, double x) { return c * std::tanh(c * a(t, x, 0, 1)); };
        if (variant == KVariant::derived) {
            p.growth = [a, c](double t, double x) {
                double th = std::tanh(c * a(t, x, 0, 1));
                return -2 * c * (a(t, x, 1, 1) * th + c * a(t, x, 0, 2));
            };
            // Sum of the two null-direction equations weighted by e^{-s c a_x}, over 2 cosh.
            p.source = [a, c](double t, double x) {
                Partials P(a, c, t, x);
                double cax = c * P.d[0][1];
                double num = std::exp(-cax) * case3_derived(P, 1).source +
                             std::exp(cax) * case3_derived(P, -1).source;
                return num / (2 * std::cosh(cax));
            };
        } else if (variant == KVariant::alt_product) {
            p.growth = [a, c](double t, double x) {
                double th = std::tanh(c * a(t, x, 0, 1));
                return -2 * (a(t, x, 1, 1) * th + c * a(t, x, 0, 2));
            };
            p.source = [a, c](double t, double x) {
                Partials P(a, c, t, x);
                const auto& d = P.d;
                double B = P.B(0, 0), Bt = P.B(1, 0), Bx = P.B(0, 1);
                double B2 = P.B(2, 0) - c * c * P.B(0, 2);
                double X = c * c * d[0][2] * (B * B + 2 * Bt) - 2 * c * c * d[1][1] * Bx + B * Bt + B2;
                double Y = d[1][1] * (B * B + 2 * Bt) - 2 * c * c * d[0][2] * Bx + B * Bx;
                return 0.5 * X + 0.5 * c * Y * std::tanh(c * d[0][1]);
            };
        } else {
            throw ValidationError("build_k_problem: variant " + std::string(to_string(variant)) +
                                  " is not defined for case4");
        }
        return p;
    }

    if (variant == KVariant::derived) {
        p.speed = [s, c](double, double) { return -s * c; };
        p.growth = [a, s, c](double t, double x) { return 2 * (s * c * a(t, x, 1, 1) - c * c * a(t, x, 0, 2)); };
        p.source = [a, s, c](double t, double x) { return case3_derived(Partials(a, c, t, x), s).source; };
        return p;
    }

    const bool swapped =
        variant == KVariant::alt_product_swapped || variant == KVariant::alt_composed_swapped;
    const bool composed =
        variant == KVariant::alt_composed || variant == KVariant::alt_composed_swapped;
    // Orientation of the lightcone derivative: d_o = d_t + o c d_x.
    const int o = swapped ? -s : s;
    p.speed = [o, c](double, double) { return o * c; };
    p.growth = [a, o, c](double t, double x) {
        return 2 * o * c * (a(t, x, 1, 1) + o * c * a(t, x, 0, 2));
    };
    p.source = [a, o, c, composed](double t, double x) {
        Partials P(a, c, t, x);
        const auto& d = P.d;
        double dax = d[1][1] + o * c * d[0][2];
        double da = d[1][0] + o * c * d[0][1];
        double d2a = d[2][0] + 2 * o * c * d[1][1] + c * c * d[0][2];
        double d3a = d[3][0] + 3 * o * c * d[2][1] + 3 * c * c * d[1][2] + o * c * c * c * d[0][3];
        double G = composed ? d3a : da * d2a;
        double B = P.B(0, 0), Bx = P.B(0, 1);
        double B2 = P.B(2, 0) - c * c * P.B(0, 2);
        return -(c * dax * (4 * c * Bx + o * B * B) - G - B2) / (2 * c * c);
    };
    return p;
}

TransportProblem build_b0_problem(const FieldFn& a, double c) {
    require_order(a, 1, "build_b0_problem");
    TransportProblem p;
    p.speed = [a, c](double t, double x) { return c * std::tanh(c * a(t, x, 0, 1)); };
    p.growth = [](double, double) { return 0.0; };
    p.source = [](double, double) { return 0.0; };
    p.initial = [](double x) { return x; };
    p.speed_bound = c;
    p.name = "b0";
    return p;
}

TransportProblem build_b_problem(const FieldFn& a, double c) {
    require_order(a, 2, "build_b_problem");
    TransportProblem p;
    p.speed = [a, c](double t, double x) { return c * std::tanh(c * a(t, x, 0, 1)); };
    p.growth = [](double, double) { return 0.0; };
    p.source = [a, c](double t, double x) { return box_of(a, c, t, x); };
    p.initial = [](double) { return 0.0; };
    p.speed_bound = c;
    p.name = "b";
    return p;
}

}  // namespace wavecons
