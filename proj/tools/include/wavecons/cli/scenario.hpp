#pragma once

#include <wavecons/coeffs.hpp>
#include <wavecons/grid.hpp>
#include <wavecons/models.hpp>
#include <wavecons/simulate.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavecons::cli {

enum class Mode { identity, simulate, decay, map, coeff, convergence };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);
// Subcommand name: check-identity, simulate, decay, map, coeff, convergence.
std::string_view command_name(Mode m);
std::optional<Mode> parse_command(std::string_view s);

// Analytic profile of (t, x), one of the built-in kinds.
struct FieldSpec {
    std::string kind;  // polynomial, sinusoid, gaussian, traveling, constant
    std::vector<double> params;
    bool operator==(const FieldSpec&) const = default;
};

struct NonlinSpec {
    std::string name = "cubic";  // cubic, sine, power, linear, zero
    std::optional<double> k, p;
    bool operator==(const NonlinSpec&) const = default;
};

// Initial profile on the line.
struct ProfileSpec {
    std::string kind = "zero";  // gaussian, gaussian_slope, sine, zero
    double amplitude = 0.0, center = 0.0, width = 1.0, wavenumber = 1.0, phase = 0.0;
    bool operator==(const ProfileSpec&) const = default;
};

struct GridSpec {
    double x_min = -20.0, x_max = 20.0;
    int n = 1024;
    std::string bc = "periodic";
    bool operator==(const GridSpec&) const = default;
};

struct BoxSpec {
    double t_min = 0.0, t_max = 2.0, x_min = -5.0, x_max = 5.0;
    int nt = 17, nx = 17;
    bool operator==(const BoxSpec&) const = default;
};

struct Scenario {
    Mode mode = Mode::identity;

    // Equation.
    std::string case_tag;
    double c = 1.0;
    std::optional<double> a, b, ctilde, alpha, k, p;
    std::optional<int> sign;
    std::optional<FieldSpec> a_profile, alpha_profile;
    std::optional<NonlinSpec> f;
    std::string case4_exponent = "derived";
    std::string k_variant = "derived";
    int ode_steps = 200;

    // Laws; empty means all supported.
    std::vector<std::string> laws;
    std::string k_normalization = "display";

    // identity, map
    std::vector<std::string> fields;  // empty means all standard fields
    std::optional<BoxSpec> box;
    double h0 = 1e-2;
    double min_order = 1.9;
    int draws = 1;

    // simulate, decay, convergence
    double t_end = 2.0;
    double cfl = 0.4;
    int spatial_order = 4;
    int record_every = 1;
    GridSpec grid;
    ProfileSpec u0, ut0;
    int levels = 3;

    // coeff
    std::string problem;  // kappa, k3, k4, b, b0
    MeshShape mesh;
    double ode_step = 1e-3;

    std::uint64_t seed = 0;
    std::string output_path;

    bool operator==(const Scenario&) const = default;
};

// Strict: unknown keys, wrong types and unknown names are ValidationError; malformed JSON is
// a ValidationError carrying the byte position.
Scenario parse_config(std::string_view document);
std::string to_json(const Scenario& s);

// Case assembled from the scenario, with coefficient profiles solved by characteristics.
// Scalar parameters are jittered by up to 10% for draw > 0, seeded by (seed, draw).
CaseSpec build_case(const Scenario& s, int draw = 0);
NonlinearFn build_nonlinear(const NonlinSpec& n);
FieldFn build_field(const FieldSpec& f);
std::vector<LawSelector> build_laws(const Scenario& s);
SimConfig build_sim_config(const Scenario& s);
GridState build_initial(const Scenario& s, int n);
SampleBox build_box(const Scenario& s);

}  // namespace wavecons::cli
