// presets.hpp — Built-in example generators

#pragma once

#include "qme/generator.hpp"

namespace qme {

// Pauli-channel qubit generator: rho' = sum_i (r_i/2)(sigma_i rho sigma_i - rho).
// Not in canonical form (the jumps are unnormalized Pauli matrices).
GeneratorSpec preset_pauli_channel(double r1, double r2, double r3);

// Qubit generator with channels sigma_+, sigma_- at unit coupling and
// sigma_3 at coupling -tanh(t)/2. Not in canonical form.
GeneratorSpec preset_driven_sign_changing();

// Same channels with the sigma_3 coupling frozen at -1/2. Not canonical.
GeneratorSpec preset_static_negative();

// Preset by index 1..3; index 1 takes the three Pauli rates.
GeneratorSpec example_spec(int index, double r1 = 0.0, double r2 = 0.0,
                           double r3 = 1.0);

} // namespace qme
