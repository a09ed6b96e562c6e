// lyapunov.hpp — Lyapunov spectra, decay rates, matrix norms and
// Lozinskii-Dahlquist envelopes

#pragma once

#include <functional>
#include <vector>

#include "qme/generator.hpp"
#include "qme/superoperator.hpp"
#include "qme/types.hpp"

namespace qme {

enum class SpectrumMethod { AutonomousEigen, Floquet, GramFiniteTime };

// Exponents sorted descending. For the finite-time Gram method, residual[i]
// is the slope of the running estimate of exponent i over the trailing
// window of the horizon (empty for the exact methods), and the history
// fields carry the running estimates at each re-orthonormalization
// checkpoint for plotting.
struct LyapunovSpectrum {
    std::vector<double> exponents;
    SpectrumMethod method = SpectrumMethod::AutonomousEigen;
    double horizon = 0.0;
    std::vector<double> residual;
    std::vector<double> history_times;
    std::vector<std::vector<double>> history; // history[k][i], checkpoint k

    // True when |residual[i]| stays below 10x the convergence tolerance.
    bool converged(std::size_t i, double tol = 1e-6) const;
};

// Real parts of the eigenvalues of the reshaped generator; requires all
// coupling schedules constant.
LyapunovSpectrum spectrum_autonomous(const GeneratorSpec& spec);

// Re log of the monodromy eigenvalue moduli over one period. The schedules
// are verified to be T-periodic by sampling.
LyapunovSpectrum spectrum_floquet(const GeneratorSpec& spec, double period,
                                  const StepControl& ctrl = {});

struct GramOptions {
    double reorth_interval = 1.0;
    StepControl step;
    double window_fraction = 0.2;   // trailing window for the residual slope
    double convergence_tol = 1e-6;
};

// Finite-time exponents from log-volume growth of propagated basis vectors,
// accumulated through periodically re-orthonormalized QR. An empty basis
// selects the orthonormalized eigenvector flag of the reshaped generator at
// t = 0, ordered by descending real part, which makes the estimates exact
// for time-autonomous specs.
LyapunovSpectrum spectrum_gram(const GeneratorSpec& spec, double horizon,
                               std::vector<Vector> basis = {},
                               const GramOptions& options = {});

// Rates sorted ascending: Gamma_0 <= ... <= Gamma_{d^2-1}, Gamma_i = -lambda.
std::vector<double> decay_rates(const LyapunovSpectrum& spectrum);

enum class NormKind { One, Two, Infinity };

// one: max column absolute sum; infinity: max row absolute sum;
// two: largest singular value.
double matrix_norm(const Matrix& m, NormKind which);

struct LdEnvelope {
    double lower = 0.0; // time-averaged rates
    double upper = 0.0;
};

// Time-averaged Lozinskii-Dahlquist envelope for the growth of ||q(t)||_a
// along q' = W(t) q, a in {1, infinity}:
//   lower = (1/T) int min_i (W_ii - sum_{j != i} |W^(a)_ij|)
//   upper = (1/T) int max_i (W_ii + sum_j     |W^(a)_ij|)
// with W^(1)_ij = W_ji and W^(inf)_ij = W_ij.
LdEnvelope lozinskii_dahlquist_envelope(
    const std::function<RealMatrix(double)>& w_schedule, double horizon,
    NormKind norm, double quad_tol = 1e-12);

} // namespace qme
