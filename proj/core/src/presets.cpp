// presets.cpp — Built-in example generators

#include "qme/presets.hpp"

#include "qme/basis.hpp"
#include "qme/errors.hpp"

namespace qme {

GeneratorSpec preset_pauli_channel(double r1, double r2, double r3)
{
    std::vector<Jump> jumps;
    jumps.push_back({pauli(1), CouplingSchedule::constant(r1 / 2.0)});
    jumps.push_back({pauli(2), CouplingSchedule::constant(r2 / 2.0)});
    jumps.push_back({pauli(3), CouplingSchedule::constant(r3 / 2.0)});
    return GeneratorSpec(2, Matrix::Zero(2, 2), std::move(jumps));
}

GeneratorSpec preset_driven_sign_changing()
{
    std::vector<Jump> jumps;
    jumps.push_back({sigma_plus(), CouplingSchedule::constant(1.0)});
    jumps.push_back({sigma_minus(), CouplingSchedule::constant(1.0)});
    jumps.push_back({pauli(3), CouplingSchedule::expression("-0.5*tanh(t)")});
    return GeneratorSpec(2, Matrix::Zero(2, 2), std::move(jumps));
}

GeneratorSpec preset_static_negative()
{
    std::vector<Jump> jumps;
    jumps.push_back({sigma_plus(), CouplingSchedule::constant(1.0)});
    jumps.push_back({sigma_minus(), CouplingSchedule::constant(1.0)});
    jumps.push_back({pauli(3), CouplingSchedule::constant(-0.5)});
    return GeneratorSpec(2, Matrix::Zero(2, 2), std::move(jumps));
}

GeneratorSpec example_spec(int index, double r1, double r2, double r3)
{
    switch (index) {
    case 1: return preset_pauli_channel(r1, r2, r3);
    case 2: return preset_driven_sign_changing();
    case 3: return preset_static_negative();
    default: throw StructuralError("example_spec: index must be 1, 2 or 3");
    }
}

} // namespace qme
