// io.cpp — JSON/CSV serialization

#include "qme/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qme/errors.hpp"

namespace qme {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& path,
                       const std::string& why)
{
    throw StructuralError(context + ": " + path + ": " + why);
}

ordered_json complex_to_json(const Complex& z)
{
    return ordered_json::array({z.real(), z.imag()});
}

Complex complex_from_json(const ordered_json& j, const std::string& context,
                          const std::string& path)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(context, path, "expected a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json matrix_to_json(const Matrix& m)
{
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json real_matrix_to_json(const RealMatrix& m)
{
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vector_to_json(const Vector& v)
{
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(complex_to_json(v(i)));
    return out;
}

Matrix matrix_from_json(const ordered_json& j, const std::string& context,
                        const std::string& path)
{
    if (!j.is_array() || j.empty()) fail(context, path, "expected a nested array");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        fail(context, path, "expected a nested array of rows");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(context, path + "[" + std::to_string(i) + "]", "ragged row");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = complex_from_json(j[i][k], context,
                                        path + "[" + std::to_string(i) + "][" +
                                            std::to_string(k) + "]");
    }
    return m;
}

ordered_json schedule_to_json(const CouplingSchedule& schedule)
{
    ordered_json j;
    const double scale = schedule.scale();
    switch (schedule.kind()) {
    case CouplingSchedule::Kind::Constant:
        j["kind"] = "constant";
        j["value"] = schedule.constant_value(); // scale folded in
        break;
    case CouplingSchedule::Kind::PeriodicSum: {
        j["kind"] = "periodic-sum";
        ordered_json terms = ordered_json::array();
        for (const auto& h : schedule.harmonics()) {
            ordered_json term;
            term["amplitude"] = h.amplitude * scale;
            term["omega"] = h.omega;
            term["phase"] = h.phase;
            terms.push_back(std::move(term));
        }
        j["terms"] = std::move(terms);
        break;
    }
    case CouplingSchedule::Kind::Tabulated: {
        j["kind"] = "tabulated";
        ordered_json samples = ordered_json::array();
        for (const auto& [t, v] : schedule.samples())
            samples.push_back(ordered_json::array({t, v * scale}));
        j["samples"] = std::move(samples);
        break;
    }
    case CouplingSchedule::Kind::Expr:
        j["kind"] = "expression";
        j["formula"] = schedule.formula();
        if (scale != 1.0) j["scale"] = scale;
        break;
    }
    return j;
}

CouplingSchedule schedule_from_json(const ordered_json& j, const std::string& context,
                                    const std::string& path)
{
    if (!j.is_object()) fail(context, path, "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        fail(context, path + ".kind", "missing schedule kind");
    const std::string kind = j["kind"].get<std::string>();
    double scale = 1.0;
    if (j.contains("scale")) {
        if (!j["scale"].is_number()) fail(context, path + ".scale", "expected a number");
        scale = j["scale"].get<double>();
    }

    CouplingSchedule schedule = CouplingSchedule::constant(0.0);
    if (kind == "constant") {
        if (!j.contains("value") || !j["value"].is_number())
            fail(context, path + ".value", "constant schedule needs a numeric value");
        schedule = CouplingSchedule::constant(j["value"].get<double>());
    } else if (kind == "periodic-sum") {
        if (!j.contains("terms") || !j["terms"].is_array())
            fail(context, path + ".terms", "periodic-sum schedule needs a terms array");
        std::vector<CouplingSchedule::Harmonic> harmonics;
        for (std::size_t i = 0; i < j["terms"].size(); ++i) {
            const auto& term = j["terms"][i];
            const std::string term_path = path + ".terms[" + std::to_string(i) + "]";
            if (!term.is_object()) fail(context, term_path, "expected an object");
            CouplingSchedule::Harmonic h;
            for (const char* key : {"amplitude", "omega", "phase"})
                if (term.contains(key) && !term[key].is_number())
                    fail(context, term_path + "." + key, "expected a number");
            if (term.contains("amplitude")) h.amplitude = term["amplitude"].get<double>();
            if (term.contains("omega")) h.omega = term["omega"].get<double>();
            if (term.contains("phase")) h.phase = term["phase"].get<double>();
            harmonics.push_back(h);
        }
        schedule = CouplingSchedule::periodic_sum(std::move(harmonics));
    } else if (kind == "tabulated") {
        if (!j.contains("samples") || !j["samples"].is_array())
            fail(context, path + ".samples", "tabulated schedule needs a samples array");
        std::vector<std::pair<double, double>> samples;
        for (std::size_t i = 0; i < j["samples"].size(); ++i) {
            const auto& sample = j["samples"][i];
            const std::string sample_path = path + ".samples[" + std::to_string(i) + "]";
            if (!sample.is_array() || sample.size() != 2 || !sample[0].is_number() ||
                !sample[1].is_number())
                fail(context, sample_path, "expected a [time, value] pair");
            samples.emplace_back(sample[0].get<double>(), sample[1].get<double>());
        }
        try {
            schedule = CouplingSchedule::tabulated(std::move(samples));
        } catch (const ScheduleError& e) {
            fail(context, path + ".samples", e.what());
        }
    } else if (kind == "expression") {
        if (!j.contains("formula") || !j["formula"].is_string())
            fail(context, path + ".formula", "expression schedule needs a formula string");
        try {
            schedule = CouplingSchedule::expression(j["formula"].get<std::string>());
        } catch (const ScheduleError& e) {
            fail(context, path + ".formula", e.what());
        }
    } else {
        fail(context, path + ".kind", "unknown schedule kind \"" + kind + "\"");
    }
    return (scale == 1.0) ? schedule : schedule.scaled(scale);
}

} // namespace

GeneratorSpec load_generator_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw StructuralError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return generator_spec_from_json(buffer.str(), path);
}

GeneratorSpec generator_spec_from_json(const std::string& json_text,
                                       const std::string& context)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw StructuralError(context + ": JSON parse error: " + e.what());
    }
    if (!j.is_object()) fail(context, "$", "expected a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        fail(context, "d", "missing integer dimension");
    const int d = j["d"].get<int>();

    Matrix h = Matrix::Zero(d, d);
    if (j.contains("hamiltonian"))
        h = matrix_from_json(j["hamiltonian"], context, "hamiltonian");

    std::vector<Jump> jumps;
    if (j.contains("jumps")) {
        if (!j["jumps"].is_array()) fail(context, "jumps", "expected an array");
        for (std::size_t l = 0; l < j["jumps"].size(); ++l) {
            const auto& entry = j["jumps"][l];
            const std::string jump_path = "jumps[" + std::to_string(l) + "]";
            if (!entry.is_object()) fail(context, jump_path, "expected an object");
            if (!entry.contains("matrix"))
                fail(context, jump_path + ".matrix", "missing jump matrix");
            if (!entry.contains("coupling"))
                fail(context, jump_path + ".coupling", "missing coupling schedule");
            Matrix m = matrix_from_json(entry["matrix"], context, jump_path + ".matrix");
            CouplingSchedule c =
                schedule_from_json(entry["coupling"], context, jump_path + ".coupling");
            jumps.push_back({std::move(m), std::move(c)});
        }
    }

    bool canonical = false;
    if (j.contains("canonical")) {
        if (!j["canonical"].is_boolean())
            fail(context, "canonical", "expected a boolean");
        canonical = j["canonical"].get<bool>();
    }

    try {
        return GeneratorSpec(d, std::move(h), std::move(jumps), canonical);
    } catch (const StructuralError& e) {
        throw StructuralError(context + ": " + e.what());
    }
}

std::string generator_spec_to_json(const GeneratorSpec& spec)
{
    ordered_json j;
    j["d"] = spec.dim();
    j["hamiltonian"] = matrix_to_json(spec.hamiltonian());
    ordered_json jumps = ordered_json::array();
    for (const auto& jump : spec.jumps()) {
        ordered_json entry;
        entry["matrix"] = matrix_to_json(jump.matrix);
        entry["coupling"] = schedule_to_json(jump.coupling);
        jumps.push_back(std::move(entry));
    }
    j["jumps"] = std::move(jumps);
    j["canonical"] = spec.canonical_flag();
    return j.dump(2);
}

std::string validation_report_to_json(const ValidationReport& report)
{
    ordered_json j;
    j["canonical"] = report.ok();
    j["violations"] = report.violations;
    return j.dump(2);
}

const char* spectrum_method_name(SpectrumMethod method)
{
    switch (method) {
    case SpectrumMethod::AutonomousEigen: return "autonomous-eigen";
    case SpectrumMethod::Floquet: return "floquet";
    case SpectrumMethod::GramFiniteTime: return "gram-finite-time";
    }
    return "unknown";
}

const char* positivity_class_name(PositivityClass cls)
{
    switch (cls) {
    case PositivityClass::TwoPositive: return "two-positive";
    case PositivityClass::Schwarz: return "schwarz";
    case PositivityClass::Positive: return "positive";
    }
    return "unknown";
}

PositivityClass positivity_class_from_name(const std::string& name)
{
    if (name == "two-positive") return PositivityClass::TwoPositive;
    if (name == "schwarz") return PositivityClass::Schwarz;
    if (name == "positive") return PositivityClass::Positive;
    throw StructuralError("unknown positivity class \"" + name + "\"");
}

std::string spectrum_to_json(const LyapunovSpectrum& spectrum)
{
    ordered_json j;
    j["method"] = spectrum_method_name(spectrum.method);
    j["horizon"] = spectrum.horizon;
    j["exponents"] = spectrum.exponents;
    j["residual"] = spectrum.residual;
    return j.dump(2);
}

std::string bound_report_to_json(const BoundReport& report)
{
    ordered_json j;
    j["rates"] = report.rates;
    j["ordering"] = "ascending; Gamma_max is the last entry; the sum runs "
                    "over all d^2 rates";
    j["class_assumed"] = positivity_class_name(report.class_assumed);
    j["prefactor"] = {{"num", report.c_d.num}, {"den", report.c_d.den},
                      {"value", report.c_d.value()}};
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["margin"] = report.margin;
    j["saturated"] = report.saturated;
    j["sat_tol"] = report.sat_tol;
    return j.dump(2);
}

std::string class_verdict_to_json(const ClassVerdict& verdict)
{
    ordered_json j;
    j["t"] = verdict.t;
    j["note"] = "falsifiers are one-sided: not-falsified is never a certificate";

    ordered_json lgks;
    lgks["holds"] = verdict.lgks.holds;
    if (!verdict.lgks.holds) {
        lgks["t"] = verdict.lgks.t;
        lgks["channel"] = verdict.lgks.channel;
        lgks["value"] = verdict.lgks.value;
    }
    j["lgks_generator"] = std::move(lgks);

    ordered_json cp;
    cp["yes"] = verdict.cp.yes;
    cp["min_choi_eigenvalue"] = verdict.cp.min_eigenvalue;
    ordered_json choi_eigs = ordered_json::array();
    for (Eigen::Index i = 0; i < verdict.choi_eigenvalues.size(); ++i)
        choi_eigs.push_back(verdict.choi_eigenvalues(i));
    cp["choi_eigenvalues"] = std::move(choi_eigs);
    j["cp"] = std::move(cp);

    j["k_positive_upper"] = verdict.k_positive_upper;

    ordered_json schwarz;
    schwarz["falsified"] = verdict.schwarz.falsified;
    schwarz["samples"] = verdict.schwarz.samples_used;
    if (verdict.schwarz.falsified) {
        schwarz["witness"] = matrix_to_json(verdict.schwarz.witness);
        schwarz["min_eigenvalue"] = verdict.schwarz.min_eigenvalue;
    }
    j["schwarz"] = std::move(schwarz);

    ordered_json two_positive;
    two_positive["falsified"] = verdict.two_positive.falsified;
    two_positive["samples"] = verdict.two_positive.samples_used;
    if (verdict.two_positive.falsified) {
        two_positive["witness_u"] = vector_to_json(verdict.two_positive.witness_u);
        two_positive["witness_v"] = vector_to_json(verdict.two_positive.witness_v);
        two_positive["value"] = verdict.two_positive.value;
    }
    j["two_positive"] = std::move(two_positive);

    ordered_json positive;
    positive["falsified"] = verdict.positive.falsified;
    positive["frames"] = verdict.positive.frames_tested;
    if (verdict.positive.falsified) {
        positive["witness_projector"] =
            matrix_to_json(verdict.positive.witness_projector);
        positive["entry"] = {verdict.positive.entry_i, verdict.positive.entry_j};
        positive["value"] = verdict.positive.value;
    }
    j["positive"] = std::move(positive);

    j["seed"] = verdict.options.seed;
    j["n_samples"] = verdict.options.n_samples;
    j["n_frames"] = verdict.options.n_frames;
    j["tol"] = verdict.options.tol;
    return j.dump(2);
}

std::string superoperator_to_json(const Superoperator& f)
{
    ordered_json j;
    j["d"] = f.d;
    j["matrix"] = matrix_to_json(f.matrix);
    j["pauli_transfer"] = real_matrix_to_json(pauli_transfer_matrix(f));
    return j.dump(2);
}

std::string trajectory_to_json(const Trajectory& traj)
{
    ordered_json j;
    j["d"] = traj.spec.dim();
    j["times"] = traj.times;
    ordered_json populations = ordered_json::array();
    ordered_json frames = ordered_json::array();
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        ordered_json pops = ordered_json::array();
        for (Eigen::Index i = 0; i < traj.populations[k].size(); ++i)
            pops.push_back(traj.populations[k](i));
        populations.push_back(std::move(pops));
        frames.push_back(matrix_to_json(traj.frames[k]));
    }
    j["populations"] = std::move(populations);
    j["eigenvector_frames"] = std::move(frames);
    j["degenerate_samples"] = traj.degenerate_samples;
    j["crossing_samples"] = traj.crossing_samples;
    return j.dump(2);
}

std::string format_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj)
{
    const int d = traj.spec.dim();
    out << "time";
    for (int i = 1; i <= d; ++i) out << ",p_" << i;
    out << ",trace_w,margin_two_positive,margin_schwarz\n";
    const auto two_positive =
        trace_inequality_check(traj, TraceInequalityKind::TwoPositive);
    const auto schwarz = trace_inequality_check(traj, TraceInequalityKind::Schwarz);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        out << format_number(traj.times[k]);
        for (int i = 0; i < d; ++i)
            out << ',' << format_number(traj.populations[k](i));
        out << ',' << format_number(two_positive.trace_w[k]);
        out << ',' << format_number(two_positive.margins[k]);
        out << ',' << format_number(schwarz.margins[k]);
        out << '\n';
    }
}

void write_spectrum_history_csv(std::ostream& out, const LyapunovSpectrum& spectrum)
{
    const std::size_t n = spectrum.exponents.size();
    out << "time";
    for (std::size_t i = 0; i < n; ++i) out << ",lambda_" << i;
    out << '\n';
    for (std::size_t k = 0; k < spectrum.history_times.size(); ++k) {
        out << format_number(spectrum.history_times[k]);
        for (std::size_t i = 0; i < n; ++i)
            out << ',' << format_number(spectrum.history[k][i]);
        out << '\n';
    }
}

} // namespace qme
