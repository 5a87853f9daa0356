#pragma once

#include "wavecons/conslaws.hpp"
#include "wavecons/grid.hpp"
#include "wavecons/jetcalc.hpp"
#include "wavecons/models.hpp"

#include <optional>

namespace wavecons {

enum class MapDirection { u_to_v, v_to_u };

// v = e^{phi} u. The image residual equals conformal_factor times the source residual.
struct PointMap {
    FieldFn phi;
    MapDirection direction = MapDirection::u_to_v;
    WaveEquationSpec source_eq;
    WaveEquationSpec image_eq;
    FieldFn conformal_factor;
    std::optional<CaseSpec> source_case;
    std::optional<CaseSpec> image_case;
};

// Removes the u_t term. Supports the constant-damping tags and P2_i, P2_ii; P2_iii and
// P2_iv only when a_ttx = c^2 a_xxx, otherwise IntrinsicDampingError.
PointMap map_to_undamped(const CaseSpec& spec);

// Jet of e^{phi} u from the jets of u and phi.
Jet2 push_jet(const Jet2& u, const Jet2& phi);

// v = e^{phi} u, v_t = e^{phi}(u_t + phi_t u) at time t.
GridState push_state(const GridState& state, const FieldFn& phi, double t);
// Inverse of push_state.
GridState pull_state(const GridState& state, const FieldFn& phi, double t);

// Image residual on the jet of e^{phi} f, taken by centered differences at step h,
// minus conformal_factor times the source residual on the exact jet of f.
double equivalence_residual(const PointMap& map, const FieldFn& f, double t, double x, double h);

// Largest |d/dv_t| of the image residual and of the pulled-back source residual.
double vt_dependence(const PointMap& map, double t, double x, const Jet2& vjet);

// residual_v / residual_u at one point, for cross-checking conformal_factor.
double conformal_ratio(const PointMap& map, const FieldFn& f, double t, double x);

// P2_iii with (a, k, f) mapped to the null-form equation by v = e^{(a_t - sign c a_x)/2} u.
PointMap nullform_correspondence(const FieldFn& a_field, int sign, const FieldFn& k_field,
                                 const NonlinearFn& nonlin, double c = 1.0);

// Flux potential / density weights of the undamped-image laws in the alternate form, or as derived.
enum class VLawVariant { derived, alt };

// Conservation law of the undamped image of P1_i (momentum), P1_ii (energy) or
// P1_iii (null energy).
ConservationLaw build_v_law(const CaseSpec& spec, VLawVariant variant = VLawVariant::derived);

}  // namespace wavecons
