#pragma once

#include "wavecons/jetcalc.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wavecons {

enum class LightconeOp { d_plus, d_minus, box };

// d_+- f = f_t +- c f_x, box f = f_tt - c^2 f_xx.
double lightcone_op(const FieldFn& f, LightconeOp op, double t, double x, double c = 1.0);

using PointFn = std::function<double(double t, double x)>;

// u_t + speed u_x = growth u + source, u(0, x) = initial(x).
struct TransportProblem {
    PointFn speed;
    PointFn growth;
    PointFn source;
    std::function<double(double)> initial;
    double speed_bound = 1.0;  // sup |speed|
    std::string name = "transport";
};

struct MeshShape {
    double t_max = 2.0;
    double x_min = -5.0;
    double x_max = 5.0;
    int nt = 41;  // nodes, t from 0 to t_max
    int nx = 101;

    bool operator==(const MeshShape&) const = default;
};

class CoeffGrid {
public:
    CoeffGrid() = default;
    explicit CoeffGrid(const MeshShape& shape);

    const MeshShape& shape() const { return shape_; }
    double dt() const;
    double dx() const;
    double t(int i) const { return i * dt(); }
    double x(int j) const { return shape_.x_min + j * dx(); }

    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * shape_.nx + j]; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * shape_.nx + j]; }

    // Tensor 4-point Lagrange interpolation; throws outside the box.
    double interpolate(double t, double x) const;
    FieldFn as_field(std::string name = "coeff") const;

private:
    MeshShape shape_;
    std::vector<double> values_;
};

struct CharacteristicTrace {
    double foot = 0.0;   // x at t = 0
    double value = 0.0;  // u(t, x)
};

// Classical RK4 backward along dx/dt = speed in `steps` equal steps, carrying the
// growth and source integrals.
CharacteristicTrace trace_characteristic(const TransportProblem& p, double t, double x, int steps);

// Pointwise solution with a fixed step count, smooth in (t, x).
FieldFn characteristic_field(const TransportProblem& p, int steps = 200);

// Nodes are traced with about t / ode_step steps. Throws CoverageError when a foot
// leaves [x_min - speed_bound t_max, x_max + speed_bound t_max].
CoeffGrid solve_transport(const TransportProblem& p, const MeshShape& mesh, double ode_step);

// max over interior nodes of |u_t + speed u_x - growth u - source|, differencing the
// interpolant at step h.
double coefficient_residual(const CoeffGrid& g, const TransportProblem& p, double h);

// kappa_t - sign c kappa_x - 2 alpha kappa - (alpha_t - alpha^2)_t + c(c alpha_x + sign alpha^2)_x = 0
TransportProblem build_kappa_problem(const FieldFn& alpha, int sign, double c = 1.0,
                                     std::function<double(double)> initial = {});

enum class KCase { case3, case4 };

// derived: obtained through the null-form correspondence.
// alt_*: the first-order equations in the alternate form, with the grouping of the
// (d a)(d^2 a) term read as a product or as d^3 a, and the lightcone orientation
// tied to the sign or swapped.
enum class KVariant {
    derived,
    alt_product,
    alt_composed,
    alt_product_swapped,
    alt_composed_swapped,
};

std::string_view to_string(KVariant v);
std::vector<KVariant> k_variants(KCase which);

TransportProblem build_k_problem(const FieldFn& a, KCase which, int sign, double c = 1.0,
                                 KVariant variant = KVariant::derived,
                                 std::function<double(double)> initial = {});

// b0_t + c tanh(c a_x) b0_x = 0, b0(0, x) = x.
TransportProblem build_b0_problem(const FieldFn& a, double c = 1.0);
// b_t + c tanh(c a_x) b_x = a_tt - c^2 a_xx, b(0, x) = 0.
TransportProblem build_b_problem(const FieldFn& a, double c = 1.0);

}  // namespace wavecons
