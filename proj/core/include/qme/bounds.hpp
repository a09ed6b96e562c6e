// bounds.hpp — Decay-rate bound Gamma_max <= c_d sum Gamma_i and the
// deviation-from-complete-positivity indicator

#pragma once

#include <vector>

#include "qme/generator.hpp"
#include "qme/lyapunov.hpp"

namespace qme {

enum class PositivityClass { TwoPositive, Schwarz, Positive };

struct Rational {
    long num = 0;
    long den = 1;
    double value() const { return static_cast<double>(num) / den; }
};

// Class-dependent prefactor: 1/d (two-positive), 2/(d+1) (Schwarz),
// 1 (positive).
Rational prefactor(int d, PositivityClass cls);

struct BoundReport {
    std::vector<double> rates;        // ascending, Gamma_max = rates.back()
    PositivityClass class_assumed = PositivityClass::Positive;
    Rational c_d;
    double lhs = 0.0;                 // Gamma_max
    double rhs = 0.0;                 // c_d * sum of all d^2 rates
    double margin = 0.0;              // rhs - lhs
    bool saturated = false;
    double sat_tol = 1e-6;
};

// Evaluates the bound for a spectrum with d^2 exponents. The sum runs over
// all d^2 rates; the trace-preservation zero slot contributes nothing.
BoundReport check_bound(const LyapunovSpectrum& spectrum, int d,
                        PositivityClass cls, double sat_tol = 1e-6);

struct DeviationIndicator {
    double integral = 0.0; // int_0^T sum_l (|c_l| - c_l)
    double rate = 0.0;     // integral / T
};

// Time-integrated negative part of the canonical couplings; zero iff the
// sign test holds on [0, T]. Requires a canonical spec.
DeviationIndicator deviation_indicator(const GeneratorSpec& spec, double horizon,
                                       double quad_tol = 1e-12);

// Time-averaged sum of |c_l|; dominates Gamma_max for positive semigroups
// and equals (1/d) sum Gamma + deviation rate.
double coarse_bound(const GeneratorSpec& spec, double horizon,
                    double quad_tol = 1e-12);

} // namespace qme
