#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace wavecons {

enum class BoundaryCondition { periodic, dirichlet_zero };

std::string_view to_string(BoundaryCondition bc);

// Uniform grid x_i = x0 + i dx carrying (u, u_t) at time t. A periodic grid has
// period n dx and does not repeat its first node.
struct GridState {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<double> u;
    std::vector<double> ut;
    BoundaryCondition bc = BoundaryCondition::periodic;
    double t = 0.0;

    std::size_t n() const { return u.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }

    // Throws ValidationError when the invariants fail.
    void validate() const;
};

// Samples u0(x), v0(x) on n nodes covering [a, b]: periodic grids use dx = (b - a)/n,
// dirichlet grids include both endpoints and zero the boundary nodes.
GridState sample_state(double a, double b, std::size_t n, BoundaryCondition bc,
                       const std::function<double(double)>& u0,
                       const std::function<double(double)>& v0, double t = 0.0);

// Fourth-order first derivative: centered inside, wrapped when periodic, one-sided
// closure at the ends otherwise.
std::vector<double> first_derivative(const GridState& s, const std::vector<double>& f);

}  // namespace wavecons
