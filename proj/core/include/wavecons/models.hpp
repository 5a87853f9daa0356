#pragma once

#include "wavecons/jetcalc.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wavecons {

// f(y, w) with its primitive F in w. y is the structural variable of the case
// (t, x - c~t, x +- ct, b0, ...), w the scaled amplitude.
struct NonlinearFn {
    std::function<double(double y, double w)> f;
    std::function<double(double y, double w)> F;
    std::string name;

    bool empty() const { return !f; }
    double operator()(double y, double w) const { return f(y, w); }
    double primitive(double y, double w) const { return F(y, w); }
};

// Adaptive Gauss-Kronrod integral of f(y, .) over [0, w].
double primitive_by_quadrature(const std::function<double(double, double)>& f, double y, double w,
                               double tol = 1e-10);

// F may be empty; it is then built by quadrature.
NonlinearFn make_nonlinear(std::function<double(double, double)> f,
                           std::function<double(double, double)> F = {}, std::string name = "custom");

double signed_pow(double u, double p);

namespace nonlinear {
NonlinearFn zero();
NonlinearFn linear(double k);     // k w
NonlinearFn cubic();              // w^3
NonlinearFn power(double k, double p);  // k sgn(w)|w|^p
NonlinearFn sine();               // sin w
}  // namespace nonlinear

struct PrimitiveCheck {
    double max_discrepancy = 0.0;     // |dF/dw - f|
    double max_normalization = 0.0;   // |F(y, 0)|
    bool normalized(double tol = 1e-12) const { return max_normalization <= tol; }
};

PrimitiveCheck check_primitive(const NonlinearFn& n,
                               std::span<const std::pair<double, double>> samples, double hw = 1e-3);

enum class CaseTag {
    P1_i,
    P1_ii,
    P1_iii,
    COR1,
    TABLE1_row1,
    TABLE1_row2,
    TABLE1_row3,
    POWERLAW,
    P2_i,
    P2_ii,
    P2_iii,
    P2_iv,
    NULLFORM,
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view s);
std::span<const CaseTag> all_case_tags();
std::string case_tag_list();

struct CaseParams {
    std::optional<double> a, b, ctilde, alpha, k, p;
    std::optional<int> sign;
};

struct CaseProfiles {
    std::optional<FieldFn> a;       // a(t) for P2_i/ii, a(t,x) for P2_iii/iv
    std::optional<FieldFn> alpha;   // null-form damping
    std::optional<FieldFn> kappa;
    std::optional<FieldFn> k;
    std::optional<FieldFn> b;
    std::optional<FieldFn> b0;
    std::optional<FieldFn> phase;   // optional J with J_t -+ c J_x = alpha
};

// Exponent of the nonlinear term in P2_iv: derived e^{(3b - 4a_t)/2}, or the alternate
// e^{(3b - 2a_t)/2}.
enum class Case4Exponent { derived, alt };

struct CaseSpec {
    CaseTag tag = CaseTag::P1_i;
    double c = 1.0;
    CaseParams params;
    CaseProfiles profiles;
    NonlinearFn nonlin;
    Case4Exponent case4_exponent = Case4Exponent::derived;
};

// Throws ValidationError on missing or extra fields.
void validate(const CaseSpec& spec);

struct WaveEquationSpec {
    double c = 1.0;
    // g(t, x, u, u_t, u_x); u_x only enters the null-form damping.
    std::function<double(double t, double x, double u, double ut, double ux)> g;
    std::string label;

    double operator()(double t, double x, double u, double ut, double ux = 0.0) const {
        return g(t, x, u, ut, ux);
    }
};

WaveEquationSpec build_equation(const CaseSpec& spec);

// u_tt - c^2 u_xx + g
double residual(const WaveEquationSpec& eq, double t, double x, const Jet2& jet);

// exp with the overflow guard at exponent 700.
double guarded_exp(double e, const char* where = "exp");

// Characteristic integral I(t, x) = int_0^t alpha(s, x + sign c (t - s)) ds.
FieldFn characteristic_phase(const FieldFn& alpha, int sign, double c);

// The phase J used by NULLFORM: the supplied profile or the characteristic integral.
FieldFn nullform_phase(const CaseSpec& spec);

// The (f, F) pair in the coordinates of the case: for the Table 1 rows and
// POWERLAW this composes the one-argument h into f(y, w).
NonlinearFn case_nonlinear(const CaseSpec& spec);

// Partials of a_tt - c^2 a_xx.
double box_of(const FieldFn& a, double c, double t, double x, int dt = 0, int dx = 0);

}  // namespace wavecons
