#pragma once

#include "wavecons/grid.hpp"
#include "wavecons/jetcalc.hpp"
#include "wavecons/models.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavecons {

enum class LawSelector {
    momentum,         // generalized momentum
    energy,           // generalized energy
    null_energy,      // null energy with the sign carried by the case
    null_minus,       // multiplier u_t - c u_x
    null_plus,        // multiplier u_t + c u_x
    energy_momentum,  // cosh/sinh law of P2_iv
};

std::string_view to_string(LawSelector s);
std::optional<LawSelector> parse_law_selector(std::string_view s);
std::string law_selector_list();

// Coefficient of k in the u^2 term of the P2_iii density: -2k or -2c^2 k.
enum class KNormalization { display, density };

struct LawOptions {
    KNormalization k_norm = KNormalization::display;
};

struct ConservationLaw {
    JetFn Q;
    JetFn T;
    JetFn Psi;
    std::string source_tag;
    std::string variant;
    CaseTag tag = CaseTag::P1_i;
    LawSelector which = LawSelector::momentum;
    // False when T or Psi depend on x through weights or coefficients.
    bool periodic_ok = false;
};

std::vector<LawSelector> supported_laws(CaseTag tag);

ConservationLaw build_law(const CaseSpec& spec, LawSelector which, const LawOptions& opts = {});

// Q (u_tt - c^2 u_xx + g) - D_t T - D_x Psi at one point.
double identity_residual(const ConservationLaw& law, const WaveEquationSpec& eq, const FieldFn& f,
                         double t, double x, double h);

struct IdentityReport {
    std::array<double, 3> steps{};
    std::array<double, 3> norms{};  // L1 over the sample points
    double scale = 0.0;
    OrderEstimate richardson;
    OrderEstimate decay;

    bool passed(double min_order = 1.9) const;
    // Reported order: the smaller of the two estimates, or +inf when exact.
    double order() const;
};

// Runs identity_residual at h0, h0/2, h0/4 over the points.
IdentityReport check_identity(const ConservationLaw& law, const WaveEquationSpec& eq,
                              const FieldFn& f, std::span<const std::pair<double, double>> points,
                              double h0);

struct VariantSelection {
    ConservationLaw law;  // the first converging variant, or the display variant
    std::vector<std::pair<std::string, double>> orders;
    bool found = false;
};

// Tries both k normalizations of the P2_iii law against the identity oracle.
VariantSelection select_k_normalization(const CaseSpec& spec, const FieldFn& f,
                                        std::span<const std::pair<double, double>> points,
                                        double h0, double min_order = 1.9);

// Trapezoidal integral of T over the grid with 4th-order u_x.
double density_integral(const JetFn& T, const GridState& state, double t);

// Psi at the first and last node.
std::pair<double, double> boundary_flux(const JetFn& Psi, const GridState& state, double t);

// T_{E-+} - (T_E -+ c T_P) for COR1; sign = +1 selects the minus branch.
double null_combination_residual(const CaseSpec& spec, double t, double x, const Jet2& jet,
                                 int sign);

// P2_iv density minus the sum of its two null-energy brackets.
double energy_momentum_split_residual(const CaseSpec& spec, double t, double x, const Jet2& jet);

// |dT/du_t - Q| with a centered difference in u_t.
double multiplier_residual(const ConservationLaw& law, double t, double x, const Jet2& jet,
                           double du = 0.5);

}  // namespace wavecons
