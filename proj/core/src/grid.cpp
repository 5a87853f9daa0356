#include "wavecons/grid.hpp"

#include "wavecons/error.hpp"

#include <cmath>

namespace wavecons {

std::string_view to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::periodic ? "periodic" : "dirichlet_zero";
}

void GridState::validate() const {
    if (u.size() != ut.size()) throw ValidationError("GridState: u and ut differ in length");
    if (u.size() < 8) throw ValidationError("GridState: at least 8 nodes required");
    if (!(dx > 0.0) || !std::isfinite(dx)) throw ValidationError("GridState: dx must be positive");
    if (bc == BoundaryCondition::dirichlet_zero) {
        if (u.front() != 0.0 || u.back() != 0.0 || ut.front() != 0.0 || ut.back() != 0.0) {
            throw ValidationError("GridState: dirichlet_zero requires zero boundary nodes");
        }
    }
}

GridState sample_state(double a, double b, std::size_t n, BoundaryCondition bc,
                       const std::function<double(double)>& u0,
                       const std::function<double(double)>& v0, double t) {
    if (n < 8) throw ValidationError("sample_state: at least 8 nodes required");
    if (!(b > a)) throw ValidationError("sample_state: empty interval");
    GridState s;
    s.bc = bc;
    s.t = t;
    s.x0 = a;
    s.dx = bc == BoundaryCondition::periodic ? (b - a) / static_cast<double>(n)
                                             : (b - a) / static_cast<double>(n - 1);
    s.u.resize(n);
    s.ut.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.u[i] = u0(s.x(i));
        s.ut[i] = v0(s.x(i));
    }
    if (bc == BoundaryCondition::dirichlet_zero) {
        s.u.front() = s.u.back() = 0.0;
        s.ut.front() = s.ut.back() = 0.0;
    }
    return s;
}

std::vector<double> first_derivative(const GridState& s, const std::vector<double>& f) {
    const std::size_t n = f.size();
    if (n < 5) throw ValidationError("first_derivative: at least 5 nodes required");
    const double w = 1.0 / (12.0 * s.dx);
    std::vector<double> d(n);
    if (s.bc == BoundaryCondition::periodic) {
        for (std::size_t i = 0; i < n; ++i) {
            auto at = [&](long k) { return f[static_cast<std::size_t>((static_cast<long>(i) + k + static_cast<long>(n)) % static_cast<long>(n))]; };
            d[i] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) * w;
        }
        return d;
    }
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) * w;
    }
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * w;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * w;
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * w;
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * w;
    return d;
}

}  // namespace wavecons
