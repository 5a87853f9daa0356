#include "wavecons/jetcalc.hpp"

#include "wavecons/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace wavecons {

namespace {

constexpr int kBuiltinOrder = 4;

// Physicists' Hermite polynomial H_n(z).
double hermite(int n, double z) {
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        double h2 = 2.0 * z * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// d^n/ds^n exp(-((s - s0)/w)^2)
double gauss_deriv(double s, double s0, double w, int n) {
    double z = (s - s0) / w;
    double sign = (n % 2) ? -1.0 : 1.0;
    return sign * hermite(n, z) * std::exp(-z * z) / std::pow(w, n);
}

double falling(int p, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= p - i;
    return r;
}

std::string coords(double t, double x) {
    std::ostringstream os;
    os << "(t=" << t << ", x=" << x << ")";
    return os.str();
}

}  // namespace

bool Jet2::finite() const {
    return std::isfinite(u) && std::isfinite(ut) && std::isfinite(ux) && std::isfinite(utt) &&
           std::isfinite(utx) && std::isfinite(uxx);
}

FieldFn::FieldFn() : FieldFn([](double, double, int, int) { return 0.0; }, 64, "zero") {}

FieldFn::FieldFn(Evaluator eval, int max_order, std::string name, double scale)
    : eval_(std::move(eval)), max_order_(max_order), name_(std::move(name)), scale_(scale) {
    if (!eval_) throw ValidationError("FieldFn: empty evaluator");
    if (max_order_ < 0) throw ValidationError("FieldFn: negative max_order");
    if (!(scale_ > 0.0)) throw ValidationError("FieldFn: scale must be positive");
}

double FieldFn::operator()(double t, double x, int dt, int dx) const {
    if (dt < 0 || dx < 0) throw CapabilityError("FieldFn " + name_ + ": negative order");
    if (dt + dx > max_order_) {
        throw CapabilityError("FieldFn " + name_ + ": order " + std::to_string(dt + dx) +
                              " exceeds max_order " + std::to_string(max_order_));
    }
    return eval_(t, x, dt, dx);
}

FieldFn FieldFn::constant(double value, int max_order) {
    return FieldFn([value](double, double, int dt, int dx) { return dt + dx == 0 ? value : 0.0; },
                   max_order, "constant");
}

Jet2 eval_field(const FieldFn& f, double t, double x) {
    if (f.max_order() < 2) throw CapabilityError("eval_field: " + f.name() + " needs max_order >= 2");
    Jet2 j;
    j.u = f(t, x, 0, 0);
    j.ut = f(t, x, 1, 0);
    j.ux = f(t, x, 0, 1);
    j.utt = f(t, x, 2, 0);
    j.utx = f(t, x, 1, 1);
    j.uxx = f(t, x, 0, 2);
    return j;
}

double total_derivative(const JetFn& F, const FieldFn& f, Direction dir, double t, double x,
                        double h) {
    if (!(h > 0.0)) throw ValidationError("total_derivative: h must be positive");
    if (f.max_order() < 3) {
        throw CapabilityError("total_derivative: " + f.name() + " needs max_order >= 3");
    }
    double dt = dir == Direction::time ? h : 0.0;
    double dx = dir == Direction::space ? h : 0.0;
    double tp = t + dt, xp = x + dx, tm = t - dt, xm = x - dx;
    double fp = F(tp, xp, eval_field(f, tp, xp));
    double fm = F(tm, xm, eval_field(f, tm, xm));
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
        throw NumericalError("total_derivative: non-finite " + F.name + " near " + coords(t, x));
    }
    return (fp - fm) / (2.0 * h);
}

Profile gaussian_profile(double amplitude, double center, double width) {
    if (!(width > 0.0)) throw ValidationError("gaussian_profile: width must be positive");
    return [=](double s, int order) { return amplitude * gauss_deriv(s, center, width, order); };
}

FieldFn make_traveling_field(Profile w, double c, int sign, int max_order, std::string name,
                             double scale) {
    if (sign != 1 && sign != -1) throw ValidationError("traveling field: sign must be +1 or -1");
    if (!(c > 0.0)) throw ValidationError("traveling field: c must be positive");
    double speed = sign * c;
    return FieldFn(
        [w = std::move(w), speed](double t, double x, int dt, int dx) {
            return std::pow(speed, dt) * w(x + speed * t, dt + dx);
        },
        max_order, std::move(name), scale);
}

FieldFn make_test_field(FieldKind kind, std::span<const double> p) {
    auto need = [&](std::size_t n, const char* what) {
        if (p.size() != n) {
            throw ValidationError(std::string(what) + " field expects " + std::to_string(n) +
                                  " parameters, got " + std::to_string(p.size()));
        }
        for (double v : p) {
            if (!std::isfinite(v)) throw ValidationError(std::string(what) + ": non-finite parameter");
        }
    };
    switch (kind) {
        case FieldKind::gaussian: {
            need(4, "gaussian");
            double A = p[0], t0 = p[1], x0 = p[2], s = p[3];
            if (!(s > 0.0)) throw ValidationError("gaussian field: sigma must be positive");
            return FieldFn(
                [=](double t, double x, int dt, int dx) {
                    return A * gauss_deriv(t, t0, s, dt) * gauss_deriv(x, x0, s, dx);
                },
                kBuiltinOrder, "gaussian", s);
        }
        case FieldKind::sinusoid: {
            need(4, "sinusoid");
            double A = p[0], kt = p[1], kx = p[2], ph = p[3];
            double kmax = std::max(std::abs(kt), std::abs(kx));
            return FieldFn(
                [=](double t, double x, int dt, int dx) {
                    double th = kt * t + kx * x + ph + 0.5 * M_PI * (dt + dx);
                    return A * std::pow(kt, dt) * std::pow(kx, dx) * std::sin(th);
                },
                kBuiltinOrder, "sinusoid", kmax > 0.0 ? 1.0 / kmax : 1.0);
        }
        case FieldKind::polynomial: {
            if (p.empty() || p.size() > 28) {
                throw ValidationError("polynomial field: 1 to 28 coefficients (degree <= 6)");
            }
            for (double v : p) {
                if (!std::isfinite(v)) throw ValidationError("polynomial: non-finite coefficient");
            }
            struct Term {
                int pt, px;
                double a;
            };
            std::vector<Term> terms;
            std::size_t k = 0;
            for (int d = 0; d <= 6 && k < p.size(); ++d) {
                for (int i = 0; i <= d && k < p.size(); ++i, ++k) {
                    if (p[k] != 0.0) terms.push_back({d - i, i, p[k]});
                }
            }
            return FieldFn(
                [terms](double t, double x, int dt, int dx) {
                    double s = 0.0;
                    for (const auto& m : terms) {
                        if (m.pt < dt || m.px < dx) continue;
                        s += m.a * falling(m.pt, dt) * falling(m.px, dx) *
                             std::pow(t, m.pt - dt) * std::pow(x, m.px - dx);
                    }
                    return s;
                },
                kBuiltinOrder, "polynomial");
        }
        case FieldKind::traveling: {
            need(5, "traveling");
            double c = p[0], A = p[2], x0 = p[3], width = p[4];
            if (p[1] != 1.0 && p[1] != -1.0) {
                throw ValidationError("traveling field: sign must be +1 or -1");
            }
            int sign = p[1] > 0.0 ? 1 : -1;
            if (!(width > 0.0)) throw ValidationError("traveling field: width must be positive");
            return make_traveling_field(gaussian_profile(A, x0, width), c, sign, kBuiltinOrder,
                                        "traveling", width);
        }
    }
    throw ValidationError("make_test_field: unknown kind");
}

FieldFn field_sum(const FieldFn& a, const FieldFn& b) {
    return FieldFn([a, b](double t, double x, int dt, int dx) { return a(t, x, dt, dx) + b(t, x, dt, dx); },
                   std::min(a.max_order(), b.max_order()), a.name() + "+" + b.name(),
                   std::min(a.scale(), b.scale()));
}

FieldFn field_scaled(const FieldFn& a, double k) {
    return FieldFn([a, k](double t, double x, int dt, int dx) { return k * a(t, x, dt, dx); },
                   a.max_order(), a.name(), a.scale());
}

OrderEstimate estimate_order(double r1, double r2, double r3, double scale) {
    double floor = 1e-12 * std::max(scale, 0.0);
    if (std::abs(r1) <= floor && std::abs(r2) <= floor && std::abs(r3) <= floor) {
        return {0.0, true};
    }
    double d1 = std::abs(r1 - r2), d2 = std::abs(r2 - r3);
    if (d2 == 0.0) return {d1 == 0.0 ? 0.0 : INFINITY, false};
    return {std::log2(d1 / d2), false};
}

OrderEstimate estimate_decay_order(double r1, double r2, double r3, double scale) {
    double floor = 1e-12 * std::max(scale, 0.0);
    r1 = std::abs(r1);
    r2 = std::abs(r2);
    r3 = std::abs(r3);
    if (r1 <= floor && r2 <= floor && r3 <= floor) return {0.0, true};
    // Once the finest residual reaches the floor only the first ratio is informative.
    if (r3 <= floor) return {r2 <= floor ? INFINITY : std::log2(r1 / r2), false};
    return {std::min(std::log2(r1 / r2), std::log2(r2 / r3)), false};
}

std::vector<std::pair<double, double>> SampleBox::points() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(nt) * nx);
    for (int i = 0; i < nt; ++i) {
        double t = nt > 1 ? t_min + (t_max - t_min) * i / (nt - 1) : t_min;
        for (int j = 0; j < nx; ++j) {
            double x = nx > 1 ? x_min + (x_max - x_min) * j / (nx - 1) : x_min;
            out.emplace_back(t, x);
        }
    }
    return out;
}

std::vector<FieldFn> standard_test_fields(double c) {
    const std::array<double, 4> gauss{0.8, 0.9, 0.4, 2.2};
    const std::array<double, 4> sinus{0.6, 0.7, 0.5, 0.3};
    // 1, t, x, t^2, tx, x^2, t^3, t^2x, tx^2, x^3
    const std::array<double, 10> poly{0.2, 0.1, -0.08, 0.05, 0.03, -0.02, 0.01, -0.004, 0.003, 0.002};
    const std::array<double, 5> trav{c, 1.0, 0.7, 0.5, 1.8};
    return {make_test_field(FieldKind::gaussian, gauss), make_test_field(FieldKind::sinusoid, sinus),
            make_test_field(FieldKind::polynomial, poly), make_test_field(FieldKind::traveling, trav)};
}

}  // namespace wavecons
