#include "wavecons/simulate.hpp"

#include "wavecons/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavecons {

void SimConfig::validate() const {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ValidationError("SimConfig: t_end must be positive");
    if (!(cfl > 0.0) || cfl > 1.0) {
        throw ValidationError("SimConfig: cfl must lie in (0, 1], got " + std::to_string(cfl));
    }
    if (spatial_order != 2 && spatial_order != 4) throw ValidationError("SimConfig: spatial_order must be 2 or 4");
    if (record_every < 1) throw ValidationError("SimConfig: record_every must be >= 1");
    wavecons::validate(equation);
    auto ok = supported_laws(equation.tag);
    for (LawSelector l : laws) {
        if (std::find(ok.begin(), ok.end(), l) == ok.end()) {
            throw ValidationError("SimConfig: law " + std::string(to_string(l)) + " is not available for " +
                                  std::string(to_string(equation.tag)));
        }
    }
}

std::size_t DiagnosticsSeries::law_index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ValidationError("DiagnosticsSeries: no law " + name);
    return static_cast<std::size_t>(it - names.begin());
}

std::size_t DiagnosticsSeries::probe_index(const std::string& name) const {
    auto it = std::find(probe_names.begin(), probe_names.end(), name);
    if (it == probe_names.end()) throw ValidationError("DiagnosticsSeries: no probe " + name);
    return static_cast<std::size_t>(it - probe_names.begin());
}

Rhs semidiscrete_rhs(const GridState& s, const WaveEquationSpec& eq, int order) {
    if (order != 2 && order != 4) throw ValidationError("semidiscrete_rhs: order must be 2 or 4");
    const std::size_t n = s.n();
    const long N = static_cast<long>(n);
    const bool periodic = s.bc == BoundaryCondition::periodic;
    // Odd reflection about the boundary nodes, which hold zero.
    auto u = [&](long i) {
        if (periodic) return s.u[static_cast<std::size_t>((i % N + N) % N)];
        if (i < 0) return -s.u[static_cast<std::size_t>(-i)];
        if (i >= N) return -s.u[static_cast<std::size_t>(2 * (N - 1) - i)];
        return s.u[static_cast<std::size_t>(i)];
    };
    const double c2 = eq.c * eq.c;
    const double idx2 = 1.0 / (s.dx * s.dx);
    Rhs r;
    r.du = s.ut;
    r.dut.assign(n, 0.0);
    for (long i = 0; i < N; ++i) {
        if (!periodic && (i == 0 || i == N - 1)) {
            r.du[static_cast<std::size_t>(i)] = 0.0;
            continue;
        }
        double uxx, ux;
        if (order == 2) {
            uxx = (u(i + 1) - 2.0 * u(i) + u(i - 1)) * idx2;
            ux = (u(i + 1) - u(i - 1)) / (2.0 * s.dx);
        } else {
            uxx = (-u(i + 2) + 16.0 * u(i + 1) - 30.0 * u(i) + 16.0 * u(i - 1) - u(i - 2)) * idx2 / 12.0;
            ux = (-u(i + 2) + 8.0 * u(i + 1) - 8.0 * u(i - 1) + u(i - 2)) / (12.0 * s.dx);
        }
        const std::size_t k = static_cast<std::size_t>(i);
        double g = eq.g(s.t, s.x(k), s.u[k], s.ut[k], ux);
        if (!std::isfinite(g)) {
            std::ostringstream os;
            os << "semidiscrete_rhs: non-finite g at node " << i << " (x=" << s.x(k) << ", t=" << s.t << ")";
            throw NumericalError(os.str());
        }
        r.dut[k] = c2 * uxx - g;
    }
    return r;
}

int step_count(const SimConfig& cfg, double dx, double c) {
    double dt_max = cfg.cfl * dx / c;
    return std::max(1, static_cast<int>(std::ceil(cfg.t_end / dt_max - 1e-12)));
}

namespace {

// Fourth-order first derivative of an equally spaced series.
std::vector<double> series_derivative(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    if (n < 5) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a = i == 0 ? 0 : i - 1, b = i + 1 == n ? i : i + 1;
            d[i] = (y[b] - y[a]) / ((b - a) * h);
        }
        return d;
    }
    const double w = 1.0 / (12.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (-y[i + 2] + 8 * y[i + 1] - 8 * y[i - 1] + y[i - 2]) * w;
    d[0] = (-25 * y[0] + 48 * y[1] - 36 * y[2] + 16 * y[3] - 3 * y[4]) * w;
    d[1] = (-3 * y[0] - 10 * y[1] + 18 * y[2] - 6 * y[3] + y[4]) * w;
    d[n - 1] = (25 * y[n - 1] - 48 * y[n - 2] + 36 * y[n - 3] - 16 * y[n - 4] + 3 * y[n - 5]) * w;
    d[n - 2] = (3 * y[n - 1] + 10 * y[n - 2] - 18 * y[n - 3] + 6 * y[n - 4] - y[n - 5]) * w;
    return d;
}

void check_margin(const GridState& s, double width) {
    double peak = 0.0;
    for (std::size_t i = 0; i < s.n(); ++i) peak = std::max({peak, std::abs(s.u[i]), std::abs(s.ut[i])});
    const double lo = s.x(0) + width, hi = s.x(s.n() - 1) - width;
    for (std::size_t i = 0; i < s.n(); ++i) {
        double x = s.x(i);
        if ((x < lo || x > hi) && std::max(std::abs(s.u[i]), std::abs(s.ut[i])) > 1e-12 * peak) {
            std::ostringstream os;
            os << "rk4_run: data at x=" << x << " lies within the margin " << width
               << " of the boundary; weighted laws need compact support away from it";
            throw ValidationError(os.str());
        }
    }
}

}  // namespace

DiagnosticsSeries rk4_run(const SimConfig& cfg, const GridState& initial) {
    cfg.validate();
    initial.validate();
    const WaveEquationSpec eq = build_equation(cfg.equation);
    const double c = eq.c;

    std::vector<ConservationLaw> laws;
    for (LawSelector l : cfg.laws) laws.push_back(build_law(cfg.equation, l, cfg.law_options));
    for (const auto& l : cfg.extra_laws) laws.push_back(l);

    const bool all_periodic = std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.periodic_ok; });
    if (!all_periodic) {
        if (initial.bc != BoundaryCondition::dirichlet_zero) {
            throw ValidationError("rk4_run: laws with x-dependent weights need dirichlet_zero boundaries");
        }
        check_margin(initial, c * cfg.t_end + 5.0 * initial.dx);
    }

    const int steps = step_count(cfg, initial.dx, c);
    const double dt = cfg.t_end / steps;

    DiagnosticsSeries out;
    for (const auto& l : laws) out.names.push_back(std::string(to_string(l.tag)) + ":" + std::string(to_string(l.which)));
    // Disambiguate repeated names.
    for (std::size_t i = 0; i < out.names.size(); ++i) {
        int dup = 0;
        for (std::size_t j = 0; j < i; ++j) dup += out.names[j].rfind(out.names[i], 0) == 0;
        if (dup) out.names[i] += "#" + std::to_string(dup + 1);
    }
    for (const auto& p : cfg.probes) out.probe_names.push_back(p.name);
    const std::size_t L = laws.size(), P = cfg.probes.size();
    out.I.resize(L);
    out.psi_left.resize(L);
    out.psi_right.resize(L);
    out.balance.resize(L);
    out.probe.resize(P);
    out.probe_normalized.resize(P);

    GridState s = initial;
    auto record = [&]() {
        out.t.push_back(s.t);
        for (std::size_t k = 0; k < L; ++k) {
            out.I[k].push_back(density_integral(laws[k].T, s, s.t));
            auto [l, r] = boundary_flux(laws[k].Psi, s, s.t);
            out.psi_left[k].push_back(l);
            out.psi_right[k].push_back(r);
        }
        for (std::size_t k = 0; k < P; ++k) {
            double v = density_integral(cfg.probes[k].density, s, s.t);
            out.probe[k].push_back(v);
            out.probe_normalized[k].push_back(v * std::exp(cfg.probes[k].decay_rate * (s.t - initial.t)));
        }
    };

    auto stage = [&](const GridState& base, double t, const Rhs* k, double h) {
        GridState y = base;
        y.t = t;
        if (k) {
            for (std::size_t i = 0; i < y.n(); ++i) {
                y.u[i] += h * k->du[i];
                y.ut[i] += h * k->dut[i];
            }
        }
        return y;
    };

    record();
    const double t0 = initial.t;
    for (int n = 0; n < steps; ++n) {
        const double t = t0 + n * dt;
        Rhs k1 = semidiscrete_rhs(stage(s, t, nullptr, 0), eq, cfg.spatial_order);
        Rhs k2 = semidiscrete_rhs(stage(s, t + 0.5 * dt, &k1, 0.5 * dt), eq, cfg.spatial_order);
        Rhs k3 = semidiscrete_rhs(stage(s, t + 0.5 * dt, &k2, 0.5 * dt), eq, cfg.spatial_order);
        Rhs k4 = semidiscrete_rhs(stage(s, t + dt, &k3, dt), eq, cfg.spatial_order);
        double peak = 0.0;
        for (std::size_t i = 0; i < s.n(); ++i) {
            s.u[i] += dt / 6.0 * (k1.du[i] + 2 * k2.du[i] + 2 * k3.du[i] + k4.du[i]);
            s.ut[i] += dt / 6.0 * (k1.dut[i] + 2 * k2.dut[i] + 2 * k3.dut[i] + k4.dut[i]);
            peak = std::max(peak, std::abs(s.u[i]));
        }
        s.t = t0 + (n + 1) * dt;
        if (!(peak <= 1e8)) {
            std::ostringstream os;
            os << "rk4_run: max|u| = " << peak << " exceeds 1e8 at t=" << s.t;
            throw BlowUpError(os.str(), s.t);
        }
        if ((n + 1) % cfg.record_every == 0 || n + 1 == steps) record();
    }

    // Balance from the recorded series; the last interval may be shorter, so it is
    // differenced only when spacing is uniform.
    const double h = dt * cfg.record_every;
    bool uniform = true;
    for (std::size_t i = 1; i < out.t.size(); ++i) {
        if (std::abs(out.t[i] - out.t[i - 1] - h) > 1e-9 * h) uniform = false;
    }
    for (std::size_t k = 0; k < L; ++k) {
        std::vector<double> dI;
        if (uniform) {
            dI = series_derivative(out.I[k], h);
        } else {
            dI.assign(out.t.size(), 0.0);
            for (std::size_t i = 0; i < out.t.size(); ++i) {
                std::size_t a = i == 0 ? 0 : i - 1, b = i + 1 == out.t.size() ? i : i + 1;
                if (b > a) dI[i] = (out.I[k][b] - out.I[k][a]) / (out.t[b] - out.t[a]);
            }
        }
        out.balance[k].resize(out.t.size());
        for (std::size_t i = 0; i < out.t.size(); ++i) {
            out.balance[k][i] = dI[i] + out.psi_right[k][i] - out.psi_left[k][i];
        }
    }
    out.final_state = s;
    return out;
}

double fit_exponent(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.size() < 2) throw ValidationError("fit_exponent: need matching series of length >= 2");
    double st = 0, sy = 0, stt = 0, sty = 0;
    const double n = static_cast<double>(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (y[i] == 0.0) throw NumericalError("fit_exponent: zero value in series");
        double ly = std::log(std::abs(y[i]));
        st += t[i];
        sy += ly;
        stt += t[i] * t[i];
        sty += t[i] * ly;
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

double relative_drift(const std::vector<double>& I, double floor) {
    if (I.empty()) return 0.0;
    double d = 0.0;
    for (double v : I) d = std::max(d, std::abs(v - I.front()));
    return d / std::max(std::abs(I.front()), floor);
}

ConvergenceReport convergence_study(const SimConfig& cfg, const std::function<GridState(int)>& family, int n0,
                                    int levels) {
    if (levels < 3) throw ValidationError("convergence_study: levels must be >= 3");
    if (n0 < 8) throw ValidationError("convergence_study: n0 must be >= 8");
    ConvergenceReport rep;
    std::vector<ConservationLaw> laws;
    for (LawSelector l : cfg.laws) laws.push_back(build_law(cfg.equation, l, cfg.law_options));
    for (const auto& l : cfg.extra_laws) laws.push_back(l);
    // Rounding floor of I is set by the integral of |T|, which stays O(1) for laws that
    // vanish by symmetry.
    std::vector<double> iscale(laws.size(), 0.0);
    for (int l = 0; l < levels; ++l) {
        int n = n0 << l;
        GridState init = family(n);
        DiagnosticsSeries s = rk4_run(cfg, init);
        const GridState& last = s.final_state;
        if (l == 0) {
            rep.names = s.names;
            rep.drift.assign(s.names.size(), {});
            rep.balance.assign(s.names.size(), {});
        }
        rep.n.push_back(n);
        for (std::size_t k = 0; k < s.names.size(); ++k) {
            const JetFn& T = laws[k].T;
            JetFn absT{[&T](double t, double x, const Jet2& j) { return std::abs(T(t, x, j)); }, "abs"};
            iscale[k] = std::max({iscale[k], density_integral(absT, init, init.t),
                                  density_integral(absT, last, last.t)});
            double d = 0.0, b = 0.0;
            for (double v : s.I[k]) d = std::max(d, std::abs(v - s.I[k].front()));
            for (double v : s.balance[k]) b = std::max(b, std::abs(v));
            rep.drift[k].push_back(d);
            rep.balance[k].push_back(b);
        }
    }
    for (std::size_t k = 0; k < rep.names.size(); ++k) {
        const auto& d = rep.drift[k];
        const auto& b = rep.balance[k];
        const std::size_t m = d.size();
        const double scale = std::max(iscale[k], 1e-300);
        rep.drift_order.push_back(estimate_decay_order(d[m - 3], d[m - 2], d[m - 1], scale));
        rep.balance_order.push_back(estimate_decay_order(b[m - 3], b[m - 2], b[m - 1], scale));
        // Residuals that grow under refinement while above the noise floor.
        bool bad = false;
        for (std::size_t i = 1; i < m; ++i) {
            if (d[i] > d[i - 1] && d[i] > 1e-13 * std::max(1.0, scale)) bad = true;
        }
        rep.inconclusive.push_back(bad);
    }
    return rep;
}

}  // namespace wavecons
