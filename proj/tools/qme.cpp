// qme.cpp — Command line front end: validate | spectrum | propagate |
// classify | bounds | example | sweep

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qme/bounds.hpp"
#include "qme/errors.hpp"
#include "qme/io.hpp"
#include "qme/lyapunov.hpp"
#include "qme/positivity.hpp"
#include "qme/presets.hpp"
#include "qme/superoperator.hpp"
#include "qme/version.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

bool log_enabled()
{
    const char* env = std::getenv("QME_LOG");
    return env != nullptr && std::string(env) != "" && std::string(env) != "0";
}

void log_note(const std::string& message)
{
    if (log_enabled()) std::cerr << "qme: " << message << '\n';
}

struct CommonOptions {
    std::string spec_path;
    int example = 0;
    double r1 = 0.0, r2 = 0.0, r3 = 1.0;
    double t = 1.0;
    double horizon = 100.0;
    double period = 0.0;
    std::string method = "auto";
    std::string positivity_class = "two-positive";
    int samples = 500;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    std::string out_path;
    std::string format = "json";
};

qme::GeneratorSpec resolve_spec(const CommonOptions& opts)
{
    if (!opts.spec_path.empty()) return qme::load_generator_spec(opts.spec_path);
    if (opts.example != 0)
        return qme::example_spec(opts.example, opts.r1, opts.r2, opts.r3);
    throw qme::StructuralError("config: either --spec or --example is required");
}

void emit(const CommonOptions& opts, const std::string& text)
{
    if (opts.out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw qme::StructuralError("config: cannot open output file " + opts.out_path);
    out << text << '\n';
}

ordered_json envelope(const std::string& command, const CommonOptions& opts)
{
    ordered_json j;
    j["tool"] = "qme";
    j["version"] = qme::kVersion;
    j["command"] = command;
    ordered_json config;
    if (!opts.spec_path.empty()) config["spec"] = opts.spec_path;
    if (opts.example != 0) {
        config["example"] = opts.example;
        if (opts.example == 1) {
            config["r1"] = opts.r1;
            config["r2"] = opts.r2;
            config["r3"] = opts.r3;
        }
    }
    config["t"] = opts.t;
    config["horizon"] = opts.horizon;
    if (opts.period > 0.0) config["period"] = opts.period;
    config["method"] = opts.method;
    config["class"] = opts.positivity_class;
    config["samples"] = opts.samples;
    config["format"] = opts.format;
    j["config"] = std::move(config);
    j["seed"] = opts.seed;
    j["tolerances"] = {{"step", opts.tol},
                       {"canonical", qme::kCanonicalTol},
                       {"eigenvalue", qme::kEigenvalueTol}};
    return j;
}

qme::LyapunovSpectrum compute_spectrum(const qme::GeneratorSpec& spec,
                                       const CommonOptions& opts)
{
    qme::StepControl ctrl;
    ctrl.tol = opts.tol;
    std::string method = opts.method;
    if (method == "auto") {
        if (spec.time_autonomous()) method = "autonomous";
        else if (opts.period > 0.0) method = "floquet";
        else method = "gram";
    }
    if (method == "autonomous") return qme::spectrum_autonomous(spec);
    if (method == "floquet") {
        if (opts.period <= 0.0)
            throw qme::StructuralError("config: --period is required for the floquet method");
        return qme::spectrum_floquet(spec, opts.period, ctrl);
    }
    if (method == "gram") {
        qme::GramOptions gram;
        gram.step = ctrl;
        return qme::spectrum_gram(spec, opts.horizon, {}, gram);
    }
    throw qme::StructuralError("config: unknown method \"" + opts.method + "\"");
}

ordered_json spectrum_json(const qme::LyapunovSpectrum& spectrum)
{
    return ordered_json::parse(qme::spectrum_to_json(spectrum));
}

int run_validate(const CommonOptions& opts)
{
    const qme::GeneratorSpec spec = resolve_spec(opts);
    const qme::ValidationReport report = qme::validate_canonical(spec);
    ordered_json j = envelope("validate", opts);
    j["result"] = ordered_json::parse(qme::validation_report_to_json(report));
    emit(opts, j.dump(2));
    return 0;
}

int run_spectrum(const CommonOptions& opts)
{
    const qme::GeneratorSpec spec = resolve_spec(opts);
    const qme::LyapunovSpectrum spectrum = compute_spectrum(spec, opts);
    if (opts.format == "csv") {
        std::ostringstream csv;
        qme::write_spectrum_history_csv(csv, spectrum);
        emit(opts, csv.str());
        return 0;
    }
    ordered_json j = envelope("spectrum", opts);
    j["result"] = spectrum_json(spectrum);
    j["result"]["decay_rates"] = qme::decay_rates(spectrum);
    emit(opts, j.dump(2));
    return 0;
}

int run_propagate(const CommonOptions& opts)
{
    const qme::GeneratorSpec spec = resolve_spec(opts);
    qme::StepControl ctrl;
    ctrl.tol = opts.tol;
    const qme::Superoperator f = qme::propagate(spec, 0.0, opts.t, ctrl);
    ordered_json j = envelope("propagate", opts);
    j["result"] = ordered_json::parse(qme::superoperator_to_json(f));
    emit(opts, j.dump(2));
    return 0;
}

int run_classify(const CommonOptions& opts)
{
    const qme::GeneratorSpec spec = resolve_spec(opts);
    qme::ClassifyOptions options;
    options.n_samples = opts.samples;
    options.seed = opts.seed;
    options.step.tol = opts.tol;
    const qme::ClassVerdict verdict = qme::classify(spec, opts.t, options);
    ordered_json j = envelope("classify", opts);
    j["result"] = ordered_json::parse(qme::class_verdict_to_json(verdict));
    emit(opts, j.dump(2));
    return 0;
}

int run_bounds(const CommonOptions& opts)
{
    const qme::GeneratorSpec spec = resolve_spec(opts);
    const qme::PositivityClass cls =
        qme::positivity_class_from_name(opts.positivity_class);
    const qme::LyapunovSpectrum spectrum = compute_spectrum(spec, opts);
    const qme::BoundReport report =
        qme::check_bound(spectrum, spec.dim(), cls);

    const qme::GeneratorSpec canonical =
        qme::validate_canonical(spec).ok() ? spec : qme::canonicalize(spec);
    const double horizon = spec.time_autonomous() ? 1.0 : opts.horizon;
    const qme::DeviationIndicator deviation =
        qme::deviation_indicator(canonical, horizon);

    ordered_json j = envelope("bounds", opts);
    j["result"] = ordered_json::parse(qme::bound_report_to_json(report));
    j["result"]["deviation_rate"] = deviation.rate;
    j["result"]["deviation_integral"] = deviation.integral;
    j["result"]["coarse_bound"] = qme::coarse_bound(canonical, horizon);
    j["result"]["spectrum"] = spectrum_json(spectrum);
    emit(opts, j.dump(2));
    return 0;
}

int run_example(const CommonOptions& opts)
{
    CommonOptions local = opts;
    const qme::GeneratorSpec spec = qme::example_spec(local.example, local.r1,
                                                      local.r2, local.r3);
    log_note("running preset example " + std::to_string(local.example));

    // Example 2 is time dependent; its spectrum uses the finite-time method.
    qme::LyapunovSpectrum spectrum;
    if (spec.time_autonomous()) {
        spectrum = qme::spectrum_autonomous(spec);
    } else {
        qme::GramOptions gram;
        gram.step.tol = local.tol;
        spectrum = qme::spectrum_gram(spec, local.horizon, {}, gram);
    }

    const qme::PositivityClass cls = (local.example == 1)
                                         ? qme::PositivityClass::TwoPositive
                                         : qme::PositivityClass::Positive;
    const qme::BoundReport bound = qme::check_bound(spectrum, spec.dim(), cls);

    qme::ClassifyOptions options;
    options.n_samples = local.samples;
    options.seed = local.seed;
    options.step.tol = local.tol;
    const qme::ClassVerdict verdict = qme::classify(spec, local.t, options);

    const qme::GeneratorSpec canonical = qme::canonicalize(spec);
    const double horizon = spec.time_autonomous() ? 1.0 : local.horizon;
    const qme::DeviationIndicator deviation = qme::deviation_indicator(canonical, horizon);

    ordered_json j = envelope("example", local);
    j["result"]["spec"] = ordered_json::parse(qme::generator_spec_to_json(spec));
    j["result"]["spectrum"] = spectrum_json(spectrum);
    j["result"]["decay_rates"] = qme::decay_rates(spectrum);
    j["result"]["bound"] = ordered_json::parse(qme::bound_report_to_json(bound));
    j["result"]["bound"]["deviation_rate"] = deviation.rate;
    j["result"]["classification"] =
        ordered_json::parse(qme::class_verdict_to_json(verdict));
    emit(local, j.dump(2));
    return 0;
}

// Sweep over named coupling parameters of preset example 1.
struct SweepGrid {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
};

SweepGrid parse_grid(const std::vector<std::string>& params)
{
    SweepGrid grid;
    for (const auto& entry : params) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw qme::StructuralError("config: --param expects name=v1,v2,..., got \"" +
                                       entry + "\"");
        const std::string name = entry.substr(0, eq);
        if (name != "r1" && name != "r2" && name != "r3")
            throw qme::StructuralError("config: --param: unknown parameter \"" + name +
                                       "\" (example 1 has r1, r2, r3)");
        std::vector<double> values;
        std::stringstream list(entry.substr(eq + 1));
        std::string token;
        while (std::getline(list, token, ',')) {
            try {
                values.push_back(std::stod(token));
            } catch (const std::exception&) {
                throw qme::StructuralError("config: --param " + name +
                                           ": bad value \"" + token + "\"");
            }
        }
        if (values.empty())
            throw qme::StructuralError("config: --param " + name + ": empty value list");
        grid.names.push_back(name);
        grid.values.push_back(std::move(values));
    }
    return grid;
}

int run_sweep(const CommonOptions& opts, const std::vector<std::string>& params)
{
    if (opts.example != 1 && !params.empty())
        throw qme::StructuralError(
            "config: sweep supports the named parameters of --example 1");
    const SweepGrid grid = parse_grid(params);
    const qme::PositivityClass cls =
        qme::positivity_class_from_name(opts.positivity_class);

    const std::string header =
        "r1,r2,r3,gamma_0,gamma_1,gamma_2,gamma_3,lhs,rhs,margin,saturated,status";

    // Row checkpointing: completed parameter keys in an existing output file
    // are skipped so interrupted sweeps can resume.
    std::map<std::string, std::string> completed;
    if (!opts.out_path.empty()) {
        std::ifstream existing(opts.out_path);
        if (existing) {
            std::string line;
            bool first = true;
            while (std::getline(existing, line)) {
                if (first) {
                    first = false;
                    if (line != header) break; // different schema, recompute all
                    continue;
                }
                std::stringstream row(line);
                std::string r1s, r2s, r3s;
                std::getline(row, r1s, ',');
                std::getline(row, r2s, ',');
                std::getline(row, r3s, ',');
                completed[r1s + "," + r2s + "," + r3s] = line;
            }
        }
    }

    std::size_t total = grid.names.empty() ? 0 : 1;
    for (const auto& values : grid.values) total *= values.size();

    std::vector<std::string> rows;
    rows.reserve(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        double r1 = 0.0, r2 = 0.0, r3 = 1.0;
        std::size_t rest = flat;
        for (std::size_t p = grid.names.size(); p-- > 0;) {
            const double value = grid.values[p][rest % grid.values[p].size()];
            rest /= grid.values[p].size();
            if (grid.names[p] == "r1") r1 = value;
            else if (grid.names[p] == "r2") r2 = value;
            else r3 = value;
        }
        const std::string key = qme::format_number(r1) + "," +
                                qme::format_number(r2) + "," +
                                qme::format_number(r3);
        if (auto it = completed.find(key); it != completed.end()) {
            rows.push_back(it->second);
            continue;
        }
        std::string row = key;
        try {
            const qme::GeneratorSpec spec = qme::preset_pauli_channel(r1, r2, r3);
            const qme::LyapunovSpectrum spectrum = qme::spectrum_autonomous(spec);
            const qme::BoundReport report = qme::check_bound(spectrum, 2, cls);
            for (double rate : report.rates)
                row += "," + qme::format_number(rate);
            row += "," + qme::format_number(report.lhs);
            row += "," + qme::format_number(report.rhs);
            row += "," + qme::format_number(report.margin);
            row += report.saturated ? ",1" : ",0";
            row += ",ok";
        } catch (const qme::Error& e) {
            log_note(std::string("sweep row failed: ") + e.what());
            row += ",,,,,,,,failed";
        }
        rows.push_back(row);
    }

    std::ostringstream out;
    out << header << '\n';
    for (const auto& row : rows) out << row << '\n';
    emit(opts, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Master-equation generators, Lyapunov spectra, positivity "
                 "classification and decay-rate bounds"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::vector<std::string> sweep_params;

    auto add_common = [&opts](CLI::App* cmd, bool with_example = true) {
        cmd->add_option("--spec", opts.spec_path, "Generator spec JSON file");
        if (with_example)
            cmd->add_option("--example", opts.example, "Preset example index (1..3)");
        cmd->add_option("--r1", opts.r1, "Example 1 rate r1");
        cmd->add_option("--r2", opts.r2, "Example 1 rate r2");
        cmd->add_option("--r3", opts.r3, "Example 1 rate r3");
        cmd->add_option("--t", opts.t, "Evaluation time");
        cmd->add_option("--horizon", opts.horizon, "Finite-time horizon");
        cmd->add_option("--period", opts.period, "Floquet period");
        cmd->add_option("--method", opts.method,
                        "Spectrum method: auto|autonomous|floquet|gram");
        cmd->add_option("--class", opts.positivity_class,
                        "Assumed class: two-positive|schwarz|positive");
        cmd->add_option("--samples", opts.samples, "Falsifier sample count");
        cmd->add_option("--seed", opts.seed, "Sampler seed");
        cmd->add_option("--tol", opts.tol, "Step control tolerance");
        cmd->add_option("--out", opts.out_path, "Output path (default stdout)");
        cmd->add_option("--format", opts.format, "Output format: json|csv");
    };

    CLI::App* validate = app.add_subcommand("validate", "Check canonical-form constraints");
    add_common(validate);
    CLI::App* spectrum = app.add_subcommand("spectrum", "Lyapunov spectrum and decay rates");
    add_common(spectrum);
    CLI::App* propagate = app.add_subcommand("propagate", "Time-ordered propagator F(t,0)");
    add_common(propagate);
    CLI::App* classify = app.add_subcommand("classify", "Positivity-class verdict");
    add_common(classify);
    CLI::App* bounds = app.add_subcommand("bounds", "Decay-rate bound report");
    add_common(bounds);
    CLI::App* example = app.add_subcommand("example", "Run a built-in worked example");
    example->add_option("index", opts.example, "Example index (1..3)")->required();
    add_common(example, /*with_example=*/false);
    CLI::App* sweep = app.add_subcommand("sweep", "Bound reports over a parameter grid");
    sweep->add_option("--param", sweep_params,
                      "Grid values, e.g. --param r1=0,0.5,1 (repeatable)");
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*validate) return run_validate(opts);
        if (*spectrum) return run_spectrum(opts);
        if (*propagate) return run_propagate(opts);
        if (*classify) return run_classify(opts);
        if (*bounds) return run_bounds(opts);
        if (*example) return run_example(opts);
        if (*sweep) return run_sweep(opts, sweep_params);
    } catch (const qme::StructuralError& e) {
        std::cerr << "qme: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qme::UnsupportedFormError& e) {
        std::cerr << "qme: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qme::WrongMethodError& e) {
        std::cerr << "qme: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qme::Error& e) {
        std::cerr << "qme: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
