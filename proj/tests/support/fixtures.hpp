#pragma once

#include <wavecons/coeffs.hpp>
#include <wavecons/conslaws.hpp>
#include <wavecons/jetcalc.hpp>
#include <wavecons/models.hpp>

#include <random>
#include <vector>

namespace wavecons::testing {

// w^3 + 0.2 sin(y) w, so that the structural variable y enters.
NonlinearFn mixed_nonlinear();

// Smooth fields used by the off-shell checks.
std::vector<FieldFn> test_fields(double c = 1.0);

// Polynomial profile in (t, x), degree <= 4, with small random coefficients.
FieldFn random_polynomial(std::mt19937_64& rng, double size, bool t_only = false);

// Random admissible spec; coefficient profiles come from the characteristic solvers.
CaseSpec random_case(CaseTag tag, std::mt19937_64& rng, double c = 1.0, int ode_steps = 200);

// Sample box; coarser for tags whose coefficients are traced pointwise.
SampleBox sample_box_for(CaseTag tag);

}  // namespace wavecons::testing
