// bounds.cpp — Bound evaluation and deviation indicator

#include "qme/bounds.hpp"

#include <cmath>
#include <numeric>

#include "qme/errors.hpp"
#include "qme/quadrature.hpp"

namespace qme {

Rational prefactor(int d, PositivityClass cls)
{
    if (d < 2) throw StructuralError("prefactor: d must be >= 2");
    switch (cls) {
    case PositivityClass::TwoPositive: return Rational{1, d};
    case PositivityClass::Schwarz: return Rational{2, d + 1};
    case PositivityClass::Positive: return Rational{1, 1};
    }
    return Rational{1, 1};
}

BoundReport check_bound(const LyapunovSpectrum& spectrum, int d,
                        PositivityClass cls, double sat_tol)
{
    if (spectrum.exponents.size() != static_cast<std::size_t>(d) * d)
        throw StructuralError("check_bound: spectrum must have d^2 exponents, got " +
                              std::to_string(spectrum.exponents.size()));
    BoundReport report;
    report.rates = decay_rates(spectrum);
    report.class_assumed = cls;
    report.c_d = prefactor(d, cls);
    report.sat_tol = sat_tol;
    report.lhs = report.rates.back();
    const double total =
        std::accumulate(report.rates.begin(), report.rates.end(), 0.0);
    report.rhs = report.c_d.value() * total;
    report.margin = report.rhs - report.lhs;
    report.saturated = std::abs(report.margin) < sat_tol;
    return report;
}

namespace {

void require_canonical(const GeneratorSpec& spec, const char* who)
{
    if (!validate_canonical(spec).ok())
        throw UnsupportedFormError(std::string(who) +
                                   ": spec is not canonical; canonicalize first");
}

} // namespace

DeviationIndicator deviation_indicator(const GeneratorSpec& spec, double horizon,
                                       double quad_tol)
{
    require_canonical(spec, "deviation_indicator");
    if (horizon <= 0.0)
        throw StructuralError("deviation_indicator: horizon must be > 0");
    const double integral = integrate(
        [&spec](double s) {
            double total = 0.0;
            for (double c : spec.couplings_at(s)) total += std::abs(c) - c;
            return total;
        },
        0.0, horizon, quad_tol);
    return DeviationIndicator{integral, integral / horizon};
}

double coarse_bound(const GeneratorSpec& spec, double horizon, double quad_tol)
{
    require_canonical(spec, "coarse_bound");
    if (horizon <= 0.0)
        throw StructuralError("coarse_bound: horizon must be > 0");
    const double integral = integrate(
        [&spec](double s) {
            double total = 0.0;
            for (double c : spec.couplings_at(s)) total += std::abs(c);
            return total;
        },
        0.0, horizon, quad_tol);
    return integral / horizon;
}

} // namespace qme
