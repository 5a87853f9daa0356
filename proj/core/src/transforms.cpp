#include "wavecons/transforms.hpp"

#include "wavecons/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>

namespace wavecons {

namespace {

double damping_constant(const CaseSpec& s) {
    switch (s.tag) {
        case CaseTag::P1_i:
        case CaseTag::P1_ii: return *s.params.a;
        case CaseTag::P1_iii: return *s.params.a + *s.params.sign * s.c * *s.params.b;
        default: return *s.params.alpha;
    }
}

FieldFn linear_phi(double slope) {
    return FieldFn(
        [slope](double t, double, int dt, int dx) {
            if (dx > 0 || dt > 1) return 0.0;
            return dt == 0 ? slope * t : slope;
        },
        16, "phi");
}

FieldFn exp_field(const FieldFn& phi) {
    return FieldFn([phi](double t, double x, int, int) { return guarded_exp(phi(t, x), "conformal factor"); },
                   0, "conformal");
}

// g~ = e^{phi} g(t, x, e^{-phi} v, 0) - (phi_t^2 + phi_tt) v for phi = phi(t).
WaveEquationSpec generic_image(const WaveEquationSpec& src, const FieldFn& phi) {
    WaveEquationSpec img;
    img.c = src.c;
    img.label = src.label + " (undamped image)";
    img.g = [src, phi](double t, double x, double v, double, double) {
        double p = phi(t, x), p1 = phi(t, x, 1, 0), p2 = phi(t, x, 2, 0);
        double e = guarded_exp(p, "image");
        return e * src.g(t, x, v / e, 0.0, 0.0) - (p1 * p1 + p2) * v;
    };
    return img;
}

void check_not_intrinsic(const FieldFn& a, double c, const std::string& label) {
    for (double t : {0.0, 0.4, 0.9, 1.5, 2.0}) {
        for (double x : {-5.0, -2.0, 0.0, 1.0, 3.5, 5.0}) {
            double d = a(t, x, 2, 1) - c * c * a(t, x, 0, 3);
            double scale = 1.0 + std::abs(a(t, x, 2, 1)) + c * c * std::abs(a(t, x, 0, 3));
            if (std::abs(d) > 1e-12 * scale) {
                throw IntrinsicDampingError(label + ": a_ttx - c^2 a_xxx = " + std::to_string(d) +
                                            " is nonzero; the linear damping is intrinsic");
            }
        }
    }
}

Jet2 numeric_jet(const std::function<double(double, double)>& v, double t, double x, double h) {
    Jet2 j;
    double v0 = v(t, x);
    double vtp = v(t + h, x), vtm = v(t - h, x), vxp = v(t, x + h), vxm = v(t, x - h);
    j.u = v0;
    j.ut = (vtp - vtm) / (2.0 * h);
    j.ux = (vxp - vxm) / (2.0 * h);
    j.utt = (vtp - 2.0 * v0 + vtm) / (h * h);
    j.uxx = (vxp - 2.0 * v0 + vxm) / (h * h);
    j.utx = (v(t + h, x + h) - v(t + h, x - h) - v(t - h, x + h) + v(t - h, x - h)) / (4.0 * h * h);
    return j;
}

}  // namespace

Jet2 push_jet(const Jet2& u, const Jet2& p) {
    double e = guarded_exp(p.u, "push_jet");
    Jet2 v;
    v.u = e * u.u;
    v.ut = e * (u.ut + p.ut * u.u);
    v.ux = e * (u.ux + p.ux * u.u);
    v.utt = e * (u.utt + 2.0 * p.ut * u.ut + (p.utt + p.ut * p.ut) * u.u);
    v.utx = e * (u.utx + p.ut * u.ux + p.ux * u.ut + (p.utx + p.ut * p.ux) * u.u);
    v.uxx = e * (u.uxx + 2.0 * p.ux * u.ux + (p.uxx + p.ux * p.ux) * u.u);
    return v;
}

PointMap map_to_undamped(const CaseSpec& s) {
    PointMap m;
    m.source_eq = build_equation(s);
    m.source_case = s;
    const double c = s.c;
    const NonlinearFn n = case_nonlinear(s);

    switch (s.tag) {
        case CaseTag::P1_i: {
            double a = *s.params.a;
            m.phi = linear_phi(0.5 * a);
            m.image_eq.g = [a, n](double t, double, double v, double, double) {
                double e = guarded_exp(0.5 * a * t, "image");
                return e * n.f(t, v / e) - 0.25 * a * a * v;
            };
            break;
        }
        case CaseTag::P1_ii: {
            double a = *s.params.a, ct = *s.params.ctilde;
            m.phi = linear_phi(0.5 * a);
            m.image_eq.g = [a, ct, n](double t, double x, double v, double, double) {
                return n.f(x - ct * t, v) - 0.25 * a * a * v;
            };
            break;
        }
        case CaseTag::P1_iii: {
            double b = *s.params.b;
            int sg = *s.params.sign;
            m.phi = linear_phi(0.5 * damping_constant(s));
            m.image_eq.g = [=](double t, double x, double v, double, double) {
                return n.f(x + sg * c * t, v) * guarded_exp(2.0 * sg * c * b * t, "image");
            };
            break;
        }
        case CaseTag::COR1:
        case CaseTag::TABLE1_row1:
        case CaseTag::TABLE1_row2:
        case CaseTag::TABLE1_row3:
        case CaseTag::POWERLAW:
            m.phi = linear_phi(0.5 * damping_constant(s));
            m.image_eq = generic_image(m.source_eq, m.phi);
            break;
        case CaseTag::P2_i: {
            FieldFn a = *s.profiles.a;
            m.phi = field_scaled(a, 0.5);
            m.image_eq.g = [a, n](double t, double x, double v, double, double) {
                double a1 = a(t, x, 1, 0), a2 = a(t, x, 2, 0);
                double e = guarded_exp(0.5 * a(t, x), "image");
                return e * n.f(t, v / e) - (0.25 * a1 * a1 + 0.5 * a2) * v;
            };
            break;
        }
        case CaseTag::P2_ii: {
            FieldFn a = *s.profiles.a;
            m.phi = field_scaled(a, 0.5);
            m.image_eq.g = [n](double, double x, double v, double, double) { return n.f(x, v); };
            break;
        }
        case CaseTag::P2_iii:
        case CaseTag::P2_iv: {
            FieldFn a = *s.profiles.a;
            check_not_intrinsic(a, c, std::string(to_string(s.tag)));
            // box a depends on t only here; phi = (1/2) int_0^t box a.
            m.phi = FieldFn(
                [a, c](double t, double, int dt, int dx) {
                    if (dx > 0) return 0.0;
                    if (dt > 0) return 0.5 * box_of(a, c, t, 0.0, dt - 1, 0);
                    if (t == 0.0) return 0.0;
                    auto f = [&](double s) { return box_of(a, c, s, 0.0); };
                    return 0.5 * boost::math::quadrature::gauss<double, 30>::integrate(f, 0.0, t);
                },
                a.max_order() - 1, "phi");
            m.image_eq = generic_image(m.source_eq, m.phi);
            break;
        }
        case CaseTag::NULLFORM:
            throw ValidationError("map_to_undamped: NULLFORM damping is not removable by this map; "
                                  "use nullform_correspondence");
    }
    m.image_eq.c = c;
    if (m.image_eq.label.empty()) m.image_eq.label = m.source_eq.label + " (undamped image)";
    m.conformal_factor = exp_field(m.phi);
    m.direction = MapDirection::u_to_v;
    return m;
}

GridState push_state(const GridState& s, const FieldFn& phi, double t) {
    GridState v = s;
    v.t = t;
    for (std::size_t i = 0; i < s.n(); ++i) {
        double x = s.x(i);
        double p = phi(t, x);
        if (std::abs(p) > 700.0) throw OverflowError("push_state: |phi| exceeds 700");
        double e = std::exp(p);
        v.u[i] = e * s.u[i];
        v.ut[i] = e * (s.ut[i] + phi(t, x, 1, 0) * s.u[i]);
    }
    return v;
}

GridState pull_state(const GridState& s, const FieldFn& phi, double t) {
    return push_state(s, field_scaled(phi, -1.0), t);
}

double equivalence_residual(const PointMap& m, const FieldFn& f, double t, double x, double h) {
    auto v = [&](double tt, double xx) { return guarded_exp(m.phi(tt, xx), "equivalence") * f(tt, xx); };
    Jet2 vj = numeric_jet(v, t, x, h);
    Jet2 uj = eval_field(f, t, x);
    return residual(m.image_eq, t, x, vj) - m.conformal_factor(t, x) * residual(m.source_eq, t, x, uj);
}

double vt_dependence(const PointMap& m, double t, double x, const Jet2& vj) {
    Jet2 pj = eval_field(m.phi, t, x);
    Jet2 neg{-pj.u, -pj.ut, -pj.ux, -pj.utt, -pj.utx, -pj.uxx};
    double cf = m.conformal_factor(t, x);
    auto pulled = [&](const Jet2& v) { return cf * residual(m.source_eq, t, x, push_jet(v, neg)); };
    const double dv = 1.0;
    Jet2 p = vj, q = vj;
    p.ut += dv;
    q.ut -= dv;
    double d1 = std::abs((pulled(p) - pulled(q)) / (2.0 * dv));
    double d2 = std::abs((residual(m.image_eq, t, x, p) - residual(m.image_eq, t, x, q)) / (2.0 * dv));
    return std::max(d1, d2);
}

double conformal_ratio(const PointMap& m, const FieldFn& f, double t, double x) {
    Jet2 uj = eval_field(f, t, x);
    Jet2 vj = push_jet(uj, eval_field(m.phi, t, x));
    double ru = residual(m.source_eq, t, x, uj);
    if (ru == 0.0) throw NumericalError("conformal_ratio: source residual vanishes at the probe point");
    return residual(m.image_eq, t, x, vj) / ru;
}

PointMap nullform_correspondence(const FieldFn& a, int sign, const FieldFn& k, const NonlinearFn& nonlin,
                                 double c) {
    if (a.max_order() < 4) throw ValidationError("nullform_correspondence: a needs max_order >= 4");
    if (sign != 1 && sign != -1) throw ValidationError("nullform_correspondence: sign must be +-1");
    const int s = sign;

    CaseSpec src;
    src.tag = CaseTag::P2_iii;
    src.c = c;
    src.params.sign = s;
    src.profiles.a = a;
    src.profiles.k = k;
    src.nonlin = nonlin;

    FieldFn alpha(
        [a, s, c](double t, double x, int dt, int dx) {
            return s * c * (a(t, x, dt + 1, dx + 1) - s * c * a(t, x, dt, dx + 2));
        },
        a.max_order() - 2, "alpha");
    FieldFn kappa(
        [a, k, s, c](double t, double x, int, int) {
            double B = box_of(a, c, t, x);
            double Bt = box_of(a, c, t, x, 1, 0), Bx = box_of(a, c, t, x, 0, 1);
            double kappa = k(t, x) - 0.25 * B * B - 0.5 * (Bt - s * c * Bx);
            if (!std::isfinite(kappa)) throw NumericalError("nullform_correspondence: non-finite kappa");
            return kappa;
        },
        0, "kappa");
    FieldFn phase([a, s, c](double t, double x, int dt, int dx) { return s * c * a(t, x, dt, dx + 1); },
                  a.max_order() - 1, "phase");

    CaseSpec img;
    img.tag = CaseTag::NULLFORM;
    img.c = c;
    img.params.sign = s;
    img.profiles.alpha = alpha;
    img.profiles.kappa = kappa;
    img.profiles.phase = phase;
    img.nonlin = nonlin;

    PointMap m;
    m.phi = FieldFn(
        [a, s, c](double t, double x, int dt, int dx) {
            return 0.5 * (a(t, x, dt + 1, dx) - s * c * a(t, x, dt, dx + 1));
        },
        a.max_order() - 1, "phi");
    m.source_eq = build_equation(src);
    m.image_eq = build_equation(img);
    m.conformal_factor = exp_field(m.phi);
    m.source_case = src;
    m.image_case = img;
    return m;
}

ConservationLaw build_v_law(const CaseSpec& s, VLawVariant variant) {
    validate(s);
    const double c = s.c;
    const NonlinearFn n = s.nonlin;
    const bool alt = variant == VLawVariant::alt;
    ConservationLaw L;
    L.tag = s.tag;
    L.variant = alt ? "alt" : "derived";
    const std::string name = std::string(to_string(s.tag)) + "/v";
    switch (s.tag) {
        case CaseTag::P1_i: {
            double a = *s.params.a;
            // Weight of the flux potential: e^{a t} derived, e^{a t / 2} in the alternate form.
            double wexp = alt ? 0.5 * a : a;
            L.which = LawSelector::momentum;
            L.source_tag = "undamped image, case i: momentum";
            L.Q = {[](double, double, const Jet2& j) { return j.ux; }, name + ":Q"};
            L.T = {[](double, double, const Jet2& j) { return j.ut * j.ux; }, name + ":T"};
            L.Psi = {[=](double t, double, const Jet2& j) {
                         double e = guarded_exp(0.5 * a * t, "v law");
                         return -0.5 * (j.ut * j.ut + c * c * j.ux * j.ux) - 0.125 * a * a * j.u * j.u +
                                guarded_exp(wexp * t, "v law") * n.F(t, j.u / e);
                     },
                     name + ":Psi"};
            L.periodic_ok = true;
            break;
        }
        case CaseTag::P1_ii: {
            double a = *s.params.a, ct = *s.params.ctilde;
            L.which = LawSelector::energy;
            L.source_tag = "undamped image, case ii: energy";
            L.Q = {[ct](double, double, const Jet2& j) { return j.ut + ct * j.ux; }, name + ":Q"};
            L.T = {[=](double t, double x, const Jet2& j) {
                       return 0.5 * (j.ut * j.ut + c * c * j.ux * j.ux) + ct * j.ut * j.ux -
                              0.125 * a * a * j.u * j.u + n.F(x - ct * t, j.u);
                   },
                   name + ":T"};
            L.Psi = {[=](double t, double x, const Jet2& j) {
                         return -ct * (0.5 * (j.ut * j.ut + c * c * j.ux * j.ux) + 0.125 * a * a * j.u * j.u) -
                                c * c * j.ut * j.ux + ct * n.F(x - ct * t, j.u);
                     },
                     name + ":Psi"};
            break;
        }
        case CaseTag::P1_iii: {
            double b = *s.params.b;
            int sg = *s.params.sign;
            // Nonlinear weight e^{b(x + s c t)} derived, e^{-b(x + s c t)} in the alternate form.
            double nb = alt ? -b : b;
            L.which = LawSelector::null_energy;
            L.source_tag = "undamped image, case iii: null energy";
            L.Q = {[=](double t, double x, const Jet2& j) {
                       return guarded_exp(b * (x - sg * c * t), "v law") * (j.ut - sg * c * j.ux);
                   },
                   name + ":Q"};
            L.T = {[=](double t, double x, const Jet2& j) {
                       double m = j.ut - sg * c * j.ux;
                       return 0.5 * guarded_exp(b * (x - sg * c * t), "v law") * m * m +
                              guarded_exp(nb * (x + sg * c * t), "v law") * n.F(x + sg * c * t, j.u);
                   },
                   name + ":T"};
            L.Psi = {[=](double t, double x, const Jet2& j) {
                         double m = j.ut - sg * c * j.ux;
                         return sg * c *
                                (0.5 * guarded_exp(b * (x - sg * c * t), "v law") * m * m -
                                 guarded_exp(nb * (x + sg * c * t), "v law") * n.F(x + sg * c * t, j.u));
                     },
                     name + ":Psi"};
            break;
        }
        default:
            throw ValidationError("build_v_law: supports P1_i, P1_ii, P1_iii");
    }
    return L;
}

}  // namespace wavecons
