#pragma once

#include "wavecons/conslaws.hpp"
#include "wavecons/grid.hpp"
#include "wavecons/jetcalc.hpp"
#include "wavecons/models.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wavecons {

// Extra integral recorded alongside the laws. The normalized series is value * e^{rate t}.
struct Probe {
    std::string name;
    JetFn density;
    double decay_rate = 0.0;
};

struct SimConfig {
    CaseSpec equation;
    std::vector<LawSelector> laws;
    // Laws built elsewhere (image laws, ordinary energies); recorded after `laws`.
    std::vector<ConservationLaw> extra_laws;
    std::vector<Probe> probes;
    LawOptions law_options;
    double t_end = 2.0;
    double cfl = 0.4;
    int spatial_order = 4;
    int record_every = 1;

    void validate() const;
};

struct DiagnosticsSeries {
    std::vector<std::string> names;
    std::vector<double> t;
    // Indexed [law][record].
    std::vector<std::vector<double>> I, psi_left, psi_right, balance;

    std::vector<std::string> probe_names;
    std::vector<std::vector<double>> probe, probe_normalized;

    // State after the last step.
    GridState final_state;

    std::size_t records() const { return t.size(); }
    std::size_t law_index(const std::string& name) const;
    std::size_t probe_index(const std::string& name) const;
};

struct Rhs {
    std::vector<double> du;
    std::vector<double> dut;
};

// du = u_t, du_t = c^2 u_xx - g. Dirichlet ghosts use odd reflection.
Rhs semidiscrete_rhs(const GridState& state, const WaveEquationSpec& eq, int spatial_order = 4);

// Steps used for a configuration on a grid: dt = t_end / steps <= cfl dx / c.
int step_count(const SimConfig& config, double dx, double c);

// Classical RK4 from initial.t to initial.t + t_end. Throws BlowUpError when max|u| > 1e8.
DiagnosticsSeries rk4_run(const SimConfig& config, const GridState& initial);

// Least-squares slope of log|y| against t.
double fit_exponent(const std::vector<double>& t, const std::vector<double>& y);

// max_t |I(t) - I(0)| / max(|I(0)|, floor)
double relative_drift(const std::vector<double>& I, double floor = 1e-300);

struct ConvergenceReport {
    std::vector<int> n;
    std::vector<std::string> names;
    // Indexed [law][level].
    std::vector<std::vector<double>> drift, balance;
    std::vector<OrderEstimate> drift_order, balance_order;
    std::vector<bool> inconclusive;
};

// Runs the configuration on n, 2n, 4n, ... nodes. Drift orders are "exact" when every drift
// is below 1e-12 times the integral of |T| over the initial and final states.
ConvergenceReport convergence_study(const SimConfig& config,
                                    const std::function<GridState(int n)>& initial_family,
                                    int n0, int levels = 3);

}  // namespace wavecons
