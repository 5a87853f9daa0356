#include "wavecons/models.hpp"

#include "wavecons/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <sstream>

namespace wavecons {

namespace {

constexpr std::array<CaseTag, 13> kTags = {
    CaseTag::P1_i,        CaseTag::P1_ii,       CaseTag::P1_iii, CaseTag::COR1,  CaseTag::TABLE1_row1,
    CaseTag::TABLE1_row2, CaseTag::TABLE1_row3, CaseTag::POWERLAW, CaseTag::P2_i, CaseTag::P2_ii,
    CaseTag::P2_iii,      CaseTag::P2_iv,       CaseTag::NULLFORM,
};

std::string where(const CaseSpec& s) { return std::string(to_string(s.tag)) + ": "; }

double req(const std::optional<double>& v, const CaseSpec& s, const char* name) {
    if (!v) throw ValidationError(where(s) + "missing parameter '" + name + "'");
    return *v;
}

int req_sign(const CaseSpec& s) {
    if (!s.params.sign) throw ValidationError(where(s) + "missing parameter 'sign'");
    return *s.params.sign;
}

const FieldFn& req_profile(const std::optional<FieldFn>& p, const CaseSpec& s, const char* name) {
    if (!p) throw ValidationError(where(s) + "missing profile '" + name + "'");
    return *p;
}

// One-argument h of the Table 1 rows, COR1 and the like.
double h_of(const NonlinearFn& n, double w) { return n.f(0.0, w); }

}  // namespace

double signed_pow(double u, double p) {
    if (u == 0.0) return p > 0.0 ? 0.0 : (p == 0.0 ? 0.0 : NAN);
    return std::copysign(std::pow(std::abs(u), p), u);
}

double guarded_exp(double e, const char* what) {
    if (std::isnan(e)) throw NumericalError(std::string(what) + ": NaN exponent");
    if (e > 700.0) {
        std::ostringstream os;
        os << what << ": exponent " << e << " exceeds 700";
        throw OverflowError(os.str());
    }
    return std::exp(e);
}

double primitive_by_quadrature(const std::function<double(double, double)>& f, double y, double w,
                               double tol) {
    if (w == 0.0) return 0.0;
    using boost::math::quadrature::gauss_kronrod;
    auto g = [&](double s) { return f(y, s); };
    double lo = w < 0.0 ? w : 0.0;
    double hi = w < 0.0 ? 0.0 : w;
    double v = gauss_kronrod<double, 31>::integrate(g, lo, hi, 15, tol);
    return w < 0.0 ? -v : v;
}

NonlinearFn make_nonlinear(std::function<double(double, double)> f,
                           std::function<double(double, double)> F, std::string name) {
    if (!f) throw ValidationError("make_nonlinear: f is required");
    if (!F) {
        F = [f](double y, double w) { return primitive_by_quadrature(f, y, w); };
    }
    return {std::move(f), std::move(F), std::move(name)};
}

namespace nonlinear {

NonlinearFn zero() {
    return {[](double, double) { return 0.0; }, [](double, double) { return 0.0; }, "zero"};
}

NonlinearFn linear(double k) {
    return {[k](double, double w) { return k * w; }, [k](double, double w) { return 0.5 * k * w * w; },
            "linear"};
}

NonlinearFn cubic() {
    return {[](double, double w) { return w * w * w; },
            [](double, double w) { return 0.25 * w * w * w * w; }, "cubic"};
}

NonlinearFn power(double k, double p) {
    if (!(p > 0.0)) throw ValidationError("power nonlinearity: p must be positive");
    return {[k, p](double, double w) { return k * signed_pow(w, p); },
            [k, p](double, double w) { return k * std::pow(std::abs(w), p + 1.0) / (p + 1.0); },
            "power"};
}

NonlinearFn sine() {
    return {[](double, double w) { return std::sin(w); },
            [](double, double w) { return 1.0 - std::cos(w); }, "sine"};
}

}  // namespace nonlinear

PrimitiveCheck check_primitive(const NonlinearFn& n,
                               std::span<const std::pair<double, double>> samples, double hw) {
    PrimitiveCheck out;
    for (auto [y, w] : samples) {
        double d = (n.F(y, w + hw) - n.F(y, w - hw)) / (2.0 * hw);
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(d - n.f(y, w)));
        out.max_normalization = std::max(out.max_normalization, std::abs(n.F(y, 0.0)));
    }
    return out;
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::P1_i: return "P1_i";
        case CaseTag::P1_ii: return "P1_ii";
        case CaseTag::P1_iii: return "P1_iii";
        case CaseTag::COR1: return "COR1";
        case CaseTag::TABLE1_row1: return "TABLE1_row1";
        case CaseTag::TABLE1_row2: return "TABLE1_row2";
        case CaseTag::TABLE1_row3: return "TABLE1_row3";
        case CaseTag::POWERLAW: return "POWERLAW";
        case CaseTag::P2_i: return "P2_i";
        case CaseTag::P2_ii: return "P2_ii";
        case CaseTag::P2_iii: return "P2_iii";
        case CaseTag::P2_iv: return "P2_iv";
        case CaseTag::NULLFORM: return "NULLFORM";
    }
    return "?";
}

std::optional<CaseTag> parse_case_tag(std::string_view s) {
    for (CaseTag t : kTags) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

std::span<const CaseTag> all_case_tags() { return kTags; }

std::string case_tag_list() {
    std::string out;
    for (CaseTag t : kTags) {
        if (!out.empty()) out += ", ";
        out += to_string(t);
    }
    return out;
}

double box_of(const FieldFn& a, double c, double t, double x, int dt, int dx) {
    return a(t, x, dt + 2, dx) - c * c * a(t, x, dt, dx + 2);
}

void validate(const CaseSpec& s) {
    if (!(s.c > 0.0) || !std::isfinite(s.c)) throw ValidationError(where(s) + "c must be positive");

    struct Need {
        bool a = false, b = false, ctilde = false, alpha = false, k = false, p = false, sign = false;
        bool pa = false, palpha = false, pkappa = false, pk = false, pb = false, pb0 = false,
             pphase = false;
        bool nonlin = true;
    } n;
    switch (s.tag) {
        case CaseTag::P1_i: n.a = true; break;
        case CaseTag::P1_ii: n.a = n.ctilde = true; break;
        case CaseTag::P1_iii: n.a = n.b = n.sign = true; break;
        case CaseTag::COR1: n.alpha = true; break;
        case CaseTag::TABLE1_row1: n.alpha = true; break;
        case CaseTag::TABLE1_row2: n.alpha = n.ctilde = true; break;
        case CaseTag::TABLE1_row3: n.alpha = n.b = n.sign = true; break;
        case CaseTag::POWERLAW: n.alpha = n.k = n.p = true; n.nonlin = false; break;
        case CaseTag::P2_i: n.pa = true; break;
        case CaseTag::P2_ii: n.pa = true; break;
        case CaseTag::P2_iii: n.pa = n.pk = n.sign = true; break;
        case CaseTag::P2_iv: n.pa = n.pk = n.pb = n.pb0 = true; break;
        case CaseTag::NULLFORM: n.palpha = n.pkappa = n.sign = n.pphase = true; break;
    }

    auto param = [&](const std::optional<double>& v, bool needed, const char* name) {
        if (needed && !v) throw ValidationError(where(s) + "missing parameter '" + name + "'");
        if (!needed && v) throw ValidationError(where(s) + "unexpected parameter '" + name + "'");
        if (v && !std::isfinite(*v)) throw ValidationError(where(s) + "non-finite '" + name + "'");
    };
    param(s.params.a, n.a, "a");
    param(s.params.b, n.b, "b");
    param(s.params.ctilde, n.ctilde, "ctilde");
    param(s.params.alpha, n.alpha, "alpha");
    param(s.params.k, n.k, "k");
    param(s.params.p, n.p, "p");
    if (n.sign && !s.params.sign) throw ValidationError(where(s) + "missing parameter 'sign'");
    if (!n.sign && s.params.sign) throw ValidationError(where(s) + "unexpected parameter 'sign'");
    if (s.params.sign && *s.params.sign != 1 && *s.params.sign != -1) {
        throw ValidationError(where(s) + "sign must be +1 or -1");
    }

    auto profile = [&](const std::optional<FieldFn>& f, bool needed, const char* name, int order,
                       bool optional = false) {
        if (needed && !f && !optional) {
            throw ValidationError(where(s) + "missing profile '" + name + "'");
        }
        if (!needed && f) throw ValidationError(where(s) + "unexpected profile '" + name + "'");
        if (f && f->max_order() < order) {
            throw ValidationError(where(s) + "profile '" + name + "' needs max_order >= " +
                                  std::to_string(order));
        }
    };
    int a_order = (s.tag == CaseTag::P2_iii || s.tag == CaseTag::P2_iv) ? 3 : 2;
    profile(s.profiles.a, n.pa, "a", a_order);
    profile(s.profiles.alpha, n.palpha, "alpha", 1);
    profile(s.profiles.kappa, n.pkappa, "kappa", 0);
    profile(s.profiles.k, n.pk, "k", 0);
    profile(s.profiles.b, n.pb, "b", 0);
    profile(s.profiles.b0, n.pb0, "b0", 0);
    profile(s.profiles.phase, n.pphase, "phase", 0, true);

    if (n.nonlin && s.nonlin.empty()) throw ValidationError(where(s) + "missing nonlinearity");
    if (!n.nonlin && !s.nonlin.empty()) throw ValidationError(where(s) + "unexpected nonlinearity");
    if (!s.nonlin.empty() && !s.nonlin.F) throw ValidationError(where(s) + "nonlinearity lacks F");

    if (s.tag == CaseTag::POWERLAW && !(*s.params.p > 0.0)) {
        throw ValidationError(where(s) + "p must be positive");
    }
    if (s.tag == CaseTag::TABLE1_row2 && *s.params.ctilde == 0.0) {
        throw ValidationError(where(s) + "ctilde must be nonzero");
    }
    if (s.tag == CaseTag::TABLE1_row3 && *s.params.alpha == 0.0) {
        throw ValidationError(where(s) + "alpha must be nonzero");
    }
    if (s.tag == CaseTag::P2_i || s.tag == CaseTag::P2_ii) {
        const FieldFn& a = *s.profiles.a;
        for (double t : {0.0, 0.7, 1.9}) {
            for (double x : {-3.0, 0.0, 2.5}) {
                if (a(t, x, 0, 1) != 0.0 || a(t, x, 1, 1) != 0.0) {
                    throw ValidationError(where(s) + "profile 'a' must depend on t only");
                }
            }
        }
    }
}

FieldFn characteristic_phase(const FieldFn& alpha, int sign, double c) {
    return FieldFn(
        [alpha, sign, c](double t, double x, int, int) {
            if (t == 0.0) return 0.0;
            auto integrand = [&](double s) { return alpha(s, x + sign * c * (t - s)); };
            return boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, t);
        },
        0, "phase");
}

FieldFn nullform_phase(const CaseSpec& s) {
    if (s.profiles.phase) return *s.profiles.phase;
    return characteristic_phase(req_profile(s.profiles.alpha, s, "alpha"), req_sign(s), s.c);
}

NonlinearFn case_nonlinear(const CaseSpec& s) {
    const double c = s.c;
    switch (s.tag) {
        case CaseTag::COR1:
        case CaseTag::TABLE1_row1: {
            NonlinearFn h = s.nonlin;
            return {[h](double, double w) { return h_of(h, w); },
                    [h](double, double w) { return h.F(0.0, w); }, h.name};
        }
        case CaseTag::TABLE1_row2: {
            NonlinearFn h = s.nonlin;
            double q = req(s.params.alpha, s, "alpha") / (2.0 * req(s.params.ctilde, s, "ctilde"));
            auto f = [h, q](double y, double w) { return w * h_of(h, w * std::exp(q * y)); };
            return make_nonlinear(f, {}, "row2(" + h.name + ")");
        }
        case CaseTag::TABLE1_row3: {
            NonlinearFn h = s.nonlin;
            double al = req(s.params.alpha, s, "alpha");
            double b = req(s.params.b, s, "b");
            int sg = req_sign(s);
            double m = 1.0 - sg * 4.0 * c * b / al;
            double q = -sg * al / (2.0 * c);
            auto f = [h, m, q](double y, double w) {
                return signed_pow(w, m) * h_of(h, w * std::exp(q * y));
            };
            return make_nonlinear(f, {}, "row3(" + h.name + ")");
        }
        case CaseTag::POWERLAW:
            return nonlinear::power(req(s.params.k, s, "k"), req(s.params.p, s, "p"));
        default:
            return s.nonlin;
    }
}

WaveEquationSpec build_equation(const CaseSpec& s) {
    validate(s);
    const double c = s.c;
    const NonlinearFn n = case_nonlinear(s);
    WaveEquationSpec eq;
    eq.c = c;
    eq.label = std::string(to_string(s.tag));

    switch (s.tag) {
        case CaseTag::P1_i:
        case CaseTag::TABLE1_row1: {
            double a = s.tag == CaseTag::P1_i ? *s.params.a : *s.params.alpha;
            eq.g = [a, n](double t, double, double u, double ut, double) {
                return a * ut + n.f(t, u);
            };
            break;
        }
        case CaseTag::P1_ii: {
            double a = *s.params.a, ct = *s.params.ctilde;
            eq.g = [a, ct, n](double t, double x, double u, double ut, double) {
                double e = guarded_exp(0.5 * a * t, "P1_ii");
                return a * ut + n.f(x - ct * t, e * u) / e;
            };
            break;
        }
        case CaseTag::P1_iii: {
            double a = *s.params.a, b = *s.params.b;
            int sg = *s.params.sign;
            double A = a + sg * c * b;
            eq.g = [=](double t, double x, double u, double ut, double) {
                double w = guarded_exp(0.5 * A * t, "P1_iii") * u;
                return A * ut + 0.25 * A * A * u +
                       n.f(x + sg * c * t, w) * guarded_exp(-0.5 * (a - 3.0 * sg * c * b) * t, "P1_iii");
            };
            break;
        }
        case CaseTag::COR1: {
            double al = *s.params.alpha;
            eq.g = [al, n](double t, double, double u, double ut, double) {
                double e = guarded_exp(0.5 * al * t, "COR1");
                return al * ut + 0.25 * al * al * u + n.f(0.0, e * u) / e;
            };
            break;
        }
        case CaseTag::TABLE1_row2: {
            double al = *s.params.alpha, ct = *s.params.ctilde;
            NonlinearFn h = s.nonlin;
            eq.g = [al, ct, h](double, double x, double u, double ut, double) {
                return al * ut + u * h_of(h, u * guarded_exp(al * x / (2.0 * ct), "TABLE1_row2"));
            };
            break;
        }
        case CaseTag::TABLE1_row3: {
            double al = *s.params.alpha, b = *s.params.b;
            int sg = *s.params.sign;
            double m = 1.0 - sg * 4.0 * c * b / al;
            NonlinearFn h = s.nonlin;
            eq.g = [=](double, double x, double u, double ut, double) {
                double e = guarded_exp(-sg * al * x / (2.0 * c), "TABLE1_row3");
                return al * ut + 0.25 * al * al * u + signed_pow(u, m) * h_of(h, u * e);
            };
            break;
        }
        case CaseTag::POWERLAW: {
            double al = *s.params.alpha, k = *s.params.k, p = *s.params.p;
            eq.g = [=](double, double, double u, double ut, double) {
                return al * ut + 0.25 * al * al * u + k * signed_pow(u, p);
            };
            break;
        }
        case CaseTag::P2_i: {
            FieldFn a = *s.profiles.a;
            eq.g = [a, n](double t, double x, double u, double ut, double) {
                return a(t, x, 1, 0) * ut + n.f(t, u);
            };
            break;
        }
        case CaseTag::P2_ii: {
            FieldFn a = *s.profiles.a;
            eq.g = [a, n](double t, double x, double u, double ut, double) {
                double a1 = a(t, x, 1, 0), a2 = a(t, x, 2, 0);
                double e = guarded_exp(0.5 * a(t, x), "P2_ii");
                return a1 * ut + 0.25 * (a1 * a1 + 2.0 * a2) * u + n.f(x, e * u) / e;
            };
            break;
        }
        case CaseTag::P2_iii: {
            FieldFn a = *s.profiles.a, k = *s.profiles.k;
            int sg = *s.params.sign;
            eq.g = [=](double t, double x, double u, double ut, double) {
                double at = a(t, x, 1, 0), ax = a(t, x, 0, 1);
                double W = guarded_exp(0.5 * (sg * c * ax + at), "P2_iii") * u;
                return box_of(a, c, t, x) * ut + k(t, x) * u +
                       guarded_exp(0.5 * (3.0 * sg * c * ax - at), "P2_iii") * n.f(x + sg * c * t, W);
            };
            break;
        }
        case CaseTag::P2_iv: {
            FieldFn a = *s.profiles.a, k = *s.profiles.k, b = *s.profiles.b, b0 = *s.profiles.b0;
            double at_coef = s.case4_exponent == Case4Exponent::derived ? 4.0 : 2.0;
            eq.g = [=](double t, double x, double u, double ut, double) {
                double bv = b(t, x), at = a(t, x, 1, 0);
                double W = guarded_exp(0.5 * bv, "P2_iv") * u;
                return box_of(a, c, t, x) * ut + k(t, x) * u +
                       guarded_exp(0.5 * (3.0 * bv - at_coef * at), "P2_iv") * n.f(b0(t, x), W);
            };
            break;
        }
        case CaseTag::NULLFORM: {
            FieldFn al = *s.profiles.alpha, ka = *s.profiles.kappa;
            FieldFn J = nullform_phase(s);
            int sg = *s.params.sign;
            eq.g = [=](double t, double x, double u, double ut, double ux) {
                double e = guarded_exp(J(t, x), "NULLFORM");
                return al(t, x) * (ut + sg * c * ux) + ka(t, x) * u + e * n.f(x + sg * c * t, e * u);
            };
            break;
        }
    }

    // Probe for singular g.
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
        for (double x : {-5.0, -1.5, 0.0, 2.0, 5.0}) {
            for (double u : {-1.0, 0.0, 0.5, 1.0}) {
                for (double ut : {-1.0, 1.0}) {
                    double v;
                    try {
                        v = eq.g(t, x, u, ut, 0.25);
                    } catch (const OverflowError&) {
                        continue;
                    }
                    if (!std::isfinite(v)) {
                        std::ostringstream os;
                        os << eq.label << ": g is not finite at t=" << t << ", x=" << x << ", u=" << u
                           << ", u_t=" << ut;
                        throw SingularityError(os.str());
                    }
                }
            }
        }
    }
    return eq;
}

double residual(const WaveEquationSpec& eq, double t, double x, const Jet2& j) {
    double g = eq.g(t, x, j.u, j.ut, j.ux);
    if (!std::isfinite(g)) {
        std::ostringstream os;
        os << eq.label << ": non-finite g at t=" << t << ", x=" << x;
        throw NumericalError(os.str());
    }
    return j.utt - eq.c * eq.c * j.uxx + g;
}

}  // namespace wavecons
