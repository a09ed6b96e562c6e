// acceptance_main.cpp — End-to-end acceptance checks. Each criterion prints
// one [PASS]/[FAIL] line; the binary exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qme/basis.hpp"
#include "qme/bounds.hpp"
#include "qme/lyapunov.hpp"
#include "qme/positivity.hpp"
#include "qme/presets.hpp"
#include "qme/superoperator.hpp"
#include "qme/trajectory.hpp"
#include "support.hpp"

using namespace qme;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

std::string fmt(double v)
{
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3g", v);
    return buffer;
}

// Shared pool of random constant-coupling canonical specs (criteria 4 and 5).
std::vector<GeneratorSpec> shared_spec_pool()
{
    Rng rng(20240901);
    std::vector<GeneratorSpec> specs;
    specs.reserve(50);
    for (int i = 0; i < 50; ++i) {
        const int d = (i % 2 == 0) ? 2 : 3;
        const int channels = 1 + static_cast<int>(rng() % (d * d - 1));
        specs.push_back(
            test::random_canonical_spec(d, channels, 2.0, /*nonnegative=*/false, rng));
    }
    return specs;
}

bool criterion_1()
{
    Check check;
    const auto spectrum = spectrum_autonomous(preset_pauli_channel(0.0, 0.0, 1.0));
    const std::vector<double> expected{0.0, 0.0, -1.0, -1.0};
    for (std::size_t i = 0; i < 4; ++i)
        check.require(std::abs(spectrum.exponents[i] - expected[i]) <= 1e-10,
                      "exponent " + std::to_string(i) + " = " +
                          fmt(spectrum.exponents[i]));
    const auto report = check_bound(spectrum, 2, PositivityClass::TwoPositive, 1e-10);
    check.require(std::abs(report.margin) < 1e-10,
                  "margin = " + fmt(report.margin));
    check.require(report.saturated, "bound not saturated");
    std::printf("%s criterion 1: unital three-channel preset at rates (0,0,1): "
                "spectrum {0,0,-1,-1} exact, two-positive bound saturated "
                "(margin %s)\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(report.margin).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_2()
{
    Check check;
    const GeneratorSpec spec = preset_driven_sign_changing();
    const double horizon = 200.0;
    const auto spectrum = spectrum_gram(spec, horizon);
    const auto rates = decay_rates(spectrum);
    const double slow = std::log(2.0) / horizon;
    check.require(std::abs(rates[0]) <= 1e-6, "rate0 = " + fmt(rates[0]));
    check.require(std::abs(rates[1] - slow) <= 1e-6, "rate1 = " + fmt(rates[1]));
    check.require(std::abs(rates[2] - slow) <= 1e-6, "rate2 = " + fmt(rates[2]));
    check.require(std::abs(rates[3] - 2.0) <= 1e-4, "rate3 = " + fmt(rates[3]));

    // The slowly converging pair must be flagged by the running-estimate
    // slope; the exact modes must not.
    check.require(!spectrum.converged(1) && !spectrum.converged(2),
                  "slow modes not flagged");
    check.require(spectrum.converged(0) && spectrum.converged(3),
                  "exact modes flagged");

    LyapunovSpectrum limit;
    limit.exponents = {0.0, 0.0, 0.0, -2.0};
    limit.method = SpectrumMethod::GramFiniteTime;
    const auto report = check_bound(limit, 2, PositivityClass::Positive);
    check.require(report.saturated && report.c_d.value() == 1.0,
                  "analytic-limit bound not saturated at c_d = 1");

    const ChoiMatrix choi = choi_of(propagate(spec, 0.0, 1.0));
    const RealVector cs = choi_spectrum(choi);
    const double e2 = std::exp(-2.0);
    const double expected[4] = {0.0, 0.5 * (1 - e2), 0.5 * (1 - e2), 1 + e2};
    for (int i = 0; i < 4; ++i)
        check.require(std::abs(cs(i) - expected[i]) <= 1e-8,
                      "choi eigenvalue " + std::to_string(i) + " = " + fmt(cs(i)));

    std::printf("%s criterion 2: sign-changing preset: finite-time rates "
                "{%s, %s, %s, %s} at T=200, slow modes flagged, limit bound "
                "saturated, Choi spectrum at t=1 within 1e-8\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(rates[0]).c_str(),
                fmt(rates[1]).c_str(), fmt(rates[2]).c_str(), fmt(rates[3]).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_3()
{
    Check check;
    const GeneratorSpec spec = preset_static_negative();
    for (double t : {0.5, 1.0, 2.0}) {
        const ChoiMatrix choi = choi_of(propagate(spec, 0.0, t));
        const double expected = -0.5 * (1.0 - std::exp(-2.0 * t));
        const auto cp = cp_test(choi);
        check.require(std::abs(cp.min_eigenvalue - expected) <= 1e-8,
                      "choi minimum at t = " + fmt(t) + ": " +
                          fmt(cp.min_eigenvalue));
        check.require(k_positivity_bound(choi) == 1,
                      "k bound at t = " + fmt(t));
    }
    const auto spectrum = spectrum_autonomous(spec);
    const std::vector<double> expected{0.0, 0.0, 0.0, -2.0};
    for (std::size_t i = 0; i < 4; ++i)
        check.require(std::abs(spectrum.exponents[i] - expected[i]) <= 1e-10,
                      "exponent " + std::to_string(i));
    const auto report = check_bound(spectrum, 2, PositivityClass::Positive);
    check.require(report.saturated && report.c_d.value() == 1.0,
                  "bound not saturated at c_d = 1");
    std::printf("%s criterion 3: static negative preset: Choi minimum "
                "-(1-e^-2t)/2 at t in {0.5,1,2}, at most 1-positive, spectrum "
                "{0,0,0,-2}, bound saturated\n",
                check.ok ? "[PASS]" : "[FAIL]");
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_4(const std::vector<GeneratorSpec>& pool)
{
    Check check;
    double worst = 0.0;
    for (const auto& spec : pool) {
        const auto spectrum = spectrum_autonomous(spec);
        double sum = 0.0;
        for (double lambda : spectrum.exponents) sum += lambda;
        double coupling_sum = 0.0;
        for (double c : spec.couplings_at(0.0)) coupling_sum += c;
        const double gap = std::abs(sum + spec.dim() * coupling_sum);
        worst = std::max(worst, gap);
    }
    check.require(worst <= 1e-9, "worst sum-rule gap = " + fmt(worst));
    std::printf("%s criterion 4: 50 random canonical specs (d in {2,3}, mixed-"
                "sign couplings): exponent sum equals -d sum(c) within 1e-9 "
                "(worst %s)\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(worst).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_5(const std::vector<GeneratorSpec>& pool)
{
    Check check;
    double worst = 0.0;
    for (const auto& spec : pool) {
        const auto eigen = spectrum_autonomous(spec);
        const auto gram = spectrum_gram(spec, 50.0);
        for (std::size_t i = 0; i < eigen.exponents.size(); ++i)
            worst = std::max(worst,
                             std::abs(eigen.exponents[i] - gram.exponents[i]));
    }
    check.require(worst <= 1e-3, "worst disagreement = " + fmt(worst));
    std::printf("%s criterion 5: same 50 specs: finite-time Gram exponents at "
                "T=50 match the eigenvalue method entrywise within 1e-3 "
                "(worst %s)\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(worst).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_6()
{
    Check check;
    Rng rng(777);
    double worst_w = std::numeric_limits<double>::infinity();
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_bound = std::numeric_limits<double>::infinity();
    bool all_cp = true;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = (trial % 2 == 0) ? 2 : 3;
        const int channels = 1 + static_cast<int>(rng() % (d * d - 1));
        const auto spec =
            test::random_canonical_spec(d, channels, 1.0, /*nonnegative=*/true, rng);

        for (int traj_idx = 0; traj_idx < 10; ++traj_idx) {
            const Matrix rho0 = random_density(d, rng);
            const Trajectory traj =
                evolve_trajectory(spec, rho0, linspace(0.0, 3.0, 7));
            for (std::size_t k = 0; k < traj.times.size(); ++k) {
                const RealMatrix w = embedded_w(traj, k).matrix;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        if (i != j) worst_w = std::min(worst_w, w(i, j));
            }
            const auto margins =
                trace_inequality_check(traj, TraceInequalityKind::TwoPositive);
            for (double margin : margins.margins)
                worst_margin = std::min(worst_margin, margin);
        }

        for (double t : {0.1, 1.0, 5.0})
            all_cp = all_cp && cp_test(choi_of(propagate(spec, 0.0, t))).yes;

        const auto report = check_bound(spectrum_autonomous(spec), d,
                                        PositivityClass::TwoPositive);
        worst_bound = std::min(worst_bound, report.margin);
    }
    check.require(worst_w >= -1e-10, "embedded W off-diagonal " + fmt(worst_w));
    check.require(worst_margin >= -1e-8, "trace margin " + fmt(worst_margin));
    check.require(all_cp, "a propagator failed the Choi test");
    check.require(worst_bound >= -1e-6, "bound margin " + fmt(worst_bound));
    std::printf("%s criterion 6: 50 nonnegative-coupling specs x 10 "
                "trajectories: W off-diagonals >= -1e-10 (min %s), two-positive "
                "trace margins >= -1e-8 (min %s), propagators all CP, bound "
                "margins >= -1e-6 (min %s)\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(worst_w).c_str(),
                fmt(worst_margin).c_str(), fmt(worst_bound).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

bool criterion_7()
{
    Check check;
    Rng rng(31337);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    int violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 3);
        RealMatrix a(d, d), b(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                a(i, j) = uniform(rng);
                b(i, j) = 0.6 * uniform(rng);
            }
        const double omega = 0.5 + std::abs(uniform(rng));
        const double phase = uniform(rng);
        auto schedule = [&](double t) {
            RealMatrix w = a + std::sin(omega * t + phase) * b;
            for (int j = 0; j < d; ++j) {
                w(j, j) = 0.0;
                w(j, j) = -w.col(j).sum();
            }
            return w;
        };
        const double horizon = 2.0;
        auto complex_gen = [&](double t) -> Matrix {
            return schedule(t).cast<Complex>();
        };
        const Matrix flow = propagate_linear(complex_gen, 0.0, horizon);

        for (NormKind norm : {NormKind::One, NormKind::Infinity}) {
            const auto envelope =
                lozinskii_dahlquist_envelope(schedule, horizon, norm);
            for (int rep = 0; rep < 100; ++rep) {
                RealVector q0(d);
                for (int i = 0; i < d; ++i) q0(i) = uniform(rng);
                const RealVector qt = (flow * q0.cast<Complex>()).real();
                auto norm_of = [&](const RealVector& v) {
                    return norm == NormKind::One ? v.cwiseAbs().sum()
                                                 : v.cwiseAbs().maxCoeff();
                };
                const double growth = std::log(norm_of(qt) / norm_of(q0));
                const double lower_slack = growth - envelope.lower * horizon;
                const double upper_slack = envelope.upper * horizon - growth;
                min_slack = std::min({min_slack, lower_slack, upper_slack});
                if (lower_slack < -1e-8 || upper_slack < -1e-8) ++violations;
            }
        }
    }
    check.require(violations == 0, std::to_string(violations) + " violations");
    std::printf("%s criterion 7: 20 time-dependent classical generators x 100 "
                "vectors: log-norm growth enclosed by the envelope in the 1- "
                "and infinity-norms, zero violations beyond 1e-8 (min slack "
                "%s)\n",
                check.ok ? "[PASS]" : "[FAIL]", fmt(min_slack).c_str());
    if (!check.ok) std::printf("       %s\n", check.detail.str().c_str());
    return check.ok;
}

} // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    bool all = true;
    const auto pool = shared_spec_pool();

    struct Entry {
        std::function<bool()> run;
        double budget_seconds; // 0 = no stated budget
    };
    const std::vector<Entry> criteria{
        {[] { return criterion_1(); }, 1.0},
        {[] { return criterion_2(); }, 10.0},
        {[] { return criterion_3(); }, 1.0},
        {[&] { return criterion_4(pool); }, 30.0},
        {[&] { return criterion_5(pool); }, 0.0},
        {[] { return criterion_6(); }, 0.0},
        {[] { return criterion_7(); }, 0.0},
    };

    int index = 0;
    for (const auto& entry : criteria) {
        ++index;
        const auto start = clock::now();
        const bool ok = entry.run();
        const double elapsed =
            std::chrono::duration<double>(clock::now() - start).count();
        if (entry.budget_seconds > 0.0 && elapsed > entry.budget_seconds) {
            std::printf("[FAIL] criterion %d exceeded its %.0f s budget "
                        "(took %.2f s)\n",
                        index, entry.budget_seconds, elapsed);
            all = false;
        }
        all = all && ok;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
