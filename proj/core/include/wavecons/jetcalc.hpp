#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wavecons {

// Second-order jet of a scalar field of (t, x).
struct Jet2 {
    double u = 0.0;
    double ut = 0.0;
    double ux = 0.0;
    double utt = 0.0;
    double utx = 0.0;
    double uxx = 0.0;

    bool finite() const;
};

// Analytic field with partials up to max_order.
class FieldFn {
public:
    using Evaluator = std::function<double(double t, double x, int dt, int dx)>;

    FieldFn();
    FieldFn(Evaluator eval, int max_order, std::string name = "field", double scale = 1.0);

    // Throws CapabilityError when dt + dx exceeds max_order.
    double operator()(double t, double x, int dt = 0, int dx = 0) const;

    int max_order() const { return max_order_; }
    const std::string& name() const { return name_; }
    // Characteristic length/time scale, used for default steps.
    double scale() const { return scale_; }

    static FieldFn constant(double value, int max_order = 8);

private:
    Evaluator eval_;
    int max_order_ = 0;
    std::string name_;
    double scale_ = 1.0;
};

// Pure function of (t, x, jet), the carrier for Q, T and Psi.
struct JetFn {
    std::function<double(double t, double x, const Jet2& jet)> fn;
    std::string name;

    double operator()(double t, double x, const Jet2& jet) const { return fn(t, x, jet); }
    explicit operator bool() const { return static_cast<bool>(fn); }
};

Jet2 eval_field(const FieldFn& f, double t, double x);

enum class Direction { time, space };

// Centered difference of s -> F(point(s), jet(point(s))) along one axis.
double total_derivative(const JetFn& F, const FieldFn& f, Direction dir, double t, double x,
                        double h);

enum class FieldKind { gaussian, sinusoid, polynomial, traveling };

// gaussian   [A, t0, x0, sigma]       A exp(-((x-x0)^2 + (t-t0)^2)/sigma^2)
// sinusoid   [A, kt, kx, phase]       A sin(kt t + kx x + phase)
// polynomial coefficients graded by total degree: 1, t, x, t^2, t x, x^2, t^3, ...
// traveling  [c, sign, A, x0, width]  A exp(-((x + sign c t - x0)/width)^2)
FieldFn make_test_field(FieldKind kind, std::span<const double> params);

// Profile w(s) with its derivative of the given order.
using Profile = std::function<double(double s, int order)>;

Profile gaussian_profile(double amplitude, double center, double width);

// w(x + sign c t) for a caller-supplied profile.
FieldFn make_traveling_field(Profile w, double c, int sign, int max_order = 4,
                             std::string name = "traveling", double scale = 1.0);

// Pointwise helpers; max_order of a sum is the smaller of the two.
FieldFn field_sum(const FieldFn& a, const FieldFn& b);
FieldFn field_scaled(const FieldFn& a, double k);

struct OrderEstimate {
    double order = 0.0;
    bool exact = false;
};

// log2(|r1 - r2| / |r2 - r3|), or exact when every |r| <= 1e-12 scale.
OrderEstimate estimate_order(double r_h, double r_h2, double r_h4, double scale = 1.0);

// Observed order of the residuals themselves, log2(|r1| / |r2|) and log2(|r2| / |r3|),
// reporting the smaller one.
OrderEstimate estimate_decay_order(double r_h, double r_h2, double r_h4, double scale = 1.0);

// Gaussian, sinusoid, cubic polynomial and traveling fields sized for the default box.
std::vector<FieldFn> standard_test_fields(double c = 1.0);

// Sampling box used by the identity checks.
struct SampleBox {
    double t_min = 0.0;
    double t_max = 2.0;
    double x_min = -5.0;
    double x_max = 5.0;
    int nt = 17;
    int nx = 17;

    std::vector<std::pair<double, double>> points() const;
};

}  // namespace wavecons
