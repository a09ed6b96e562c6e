// io.hpp — JSON and CSV serialization for specs, spectra and reports
//
// JSON conventions: complex scalars are [re, im] pairs; matrices are
// row-major nested arrays. All functions returning documents produce
// deterministic key ordering so identical inputs give identical bytes.

#pragma once

#include <ostream>
#include <string>

#include "qme/bounds.hpp"
#include "qme/generator.hpp"
#include "qme/lyapunov.hpp"
#include "qme/positivity.hpp"
#include "qme/trajectory.hpp"

namespace qme {

// Generator spec files:
// {"d": int, "hamiltonian": [[[re,im],...],...],
//  "jumps": [{"matrix": ..., "coupling": {"kind": ..., ...}}],
//  "canonical": bool}
GeneratorSpec load_generator_spec(const std::string& path);
GeneratorSpec generator_spec_from_json(const std::string& json_text,
                                       const std::string& context = "<inline>");
std::string generator_spec_to_json(const GeneratorSpec& spec);

std::string validation_report_to_json(const ValidationReport& report);
std::string spectrum_to_json(const LyapunovSpectrum& spectrum);
std::string bound_report_to_json(const BoundReport& report);
std::string class_verdict_to_json(const ClassVerdict& verdict);
std::string superoperator_to_json(const Superoperator& f);
std::string trajectory_to_json(const Trajectory& traj);

// CSV emission uses '.' decimals and 17 significant digits.
std::string format_number(double value);
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_spectrum_history_csv(std::ostream& out, const LyapunovSpectrum& spectrum);

const char* spectrum_method_name(SpectrumMethod method);
const char* positivity_class_name(PositivityClass cls);
PositivityClass positivity_class_from_name(const std::string& name);

} // namespace qme
