// lyapunov.cpp — Spectrum methods and envelope estimates

#include "qme/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qme/errors.hpp"
#include "qme/quadrature.hpp"

namespace qme {

bool LyapunovSpectrum::converged(std::size_t i, double tol) const
{
    if (i >= residual.size()) return true;
    return std::abs(residual[i]) <= 10.0 * tol;
}

LyapunovSpectrum spectrum_autonomous(const GeneratorSpec& spec)
{
    if (!spec.time_autonomous())
        throw WrongMethodError(
            "spectrum_autonomous: spec has non-constant coupling schedules");
    const Superoperator gen = build_superoperator(spec, 0.0);
    Eigen::ComplexEigenSolver<Matrix> eig(gen.matrix, /*computeEigenvectors=*/false);
    if (eig.info() != Eigen::Success)
        throw ConsistencyError("spectrum_autonomous: eigensolver failed");

    LyapunovSpectrum spectrum;
    spectrum.method = SpectrumMethod::AutonomousEigen;
    spectrum.exponents.resize(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
        spectrum.exponents[i] = eig.eigenvalues()(i).real();
    std::sort(spectrum.exponents.begin(), spectrum.exponents.end(),
              std::greater<double>());
    return spectrum;
}

LyapunovSpectrum spectrum_floquet(const GeneratorSpec& spec, double period,
                                  const StepControl& ctrl)
{
    if (period <= 0.0)
        throw WrongMethodError("spectrum_floquet: period must be positive");
    // Verify c(t + T) = c(t) by sampling.
    constexpr int kPeriodSamples = 64;
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const auto& c = spec.jumps()[l].coupling;
        for (int k = 0; k < kPeriodSamples; ++k) {
            const double t = period * k / kPeriodSamples;
            const double lhs = c(t);
            const double rhs = c(t + period);
            if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(lhs)))
                throw WrongMethodError("spectrum_floquet: channel " + std::to_string(l) +
                                       " is not periodic with the given period (t = " +
                                       std::to_string(t) + ")");
        }
    }

    const Superoperator monodromy = propagate(spec, 0.0, period, ctrl);
    Eigen::ComplexEigenSolver<Matrix> eig(monodromy.matrix, false);
    if (eig.info() != Eigen::Success)
        throw ConsistencyError("spectrum_floquet: eigensolver failed");

    LyapunovSpectrum spectrum;
    spectrum.method = SpectrumMethod::Floquet;
    spectrum.horizon = period;
    spectrum.exponents.resize(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
        spectrum.exponents[i] = std::log(std::abs(eig.eigenvalues()(i))) / period;
    std::sort(spectrum.exponents.begin(), spectrum.exponents.end(),
              std::greater<double>());
    return spectrum;
}

namespace {

// Orthonormal flag of the generator eigenvectors, descending real part.
std::vector<Vector> default_gram_basis(const GeneratorSpec& spec)
{
    const Superoperator gen = build_superoperator(spec, 0.0);
    Eigen::ComplexEigenSolver<Matrix> eig(gen.matrix, true);
    if (eig.info() != Eigen::Success)
        throw ConsistencyError("spectrum_gram: eigensolver failed for default basis");
    const auto n = gen.matrix.rows();
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return eig.eigenvalues()(a).real() > eig.eigenvalues()(b).real();
    });
    std::vector<Vector> basis;
    basis.reserve(n);
    for (Eigen::Index i = 0; i < n; ++i)
        basis.push_back(eig.eigenvectors().col(order[i]));
    return basis;
}

} // namespace

LyapunovSpectrum spectrum_gram(const GeneratorSpec& spec, double horizon,
                               std::vector<Vector> basis, const GramOptions& options)
{
    if (horizon <= 0.0)
        throw WrongMethodError("spectrum_gram: horizon must be positive");
    const int n = spec.dim() * spec.dim();
    if (basis.empty()) basis = default_gram_basis(spec);
    if (basis.size() != static_cast<std::size_t>(n))
        throw StructuralError("spectrum_gram: basis must contain d^2 vectors");

    Matrix q(n, n);
    for (int j = 0; j < n; ++j) {
        if (basis[j].size() != n)
            throw StructuralError("spectrum_gram: basis vector length mismatch");
        q.col(j) = basis[j];
    }
    {
        // Orthonormalize; the flag spanned by leading columns is preserved.
        Eigen::HouseholderQR<Matrix> qr(q);
        Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j)
            if (std::abs(r(j, j)) < 1e-12)
                throw StructuralError("spectrum_gram: basis does not span");
        q = qr.householderQ() * Matrix::Identity(n, n);
    }

    auto gen = [&spec](double u) { return build_superoperator(spec, u).matrix; };

    const double interval = std::min(options.reorth_interval, horizon);
    const int checkpoints = static_cast<int>(std::ceil(horizon / interval - 1e-12));
    std::vector<double> accum(n, 0.0);

    LyapunovSpectrum spectrum;
    spectrum.method = SpectrumMethod::GramFiniteTime;
    spectrum.horizon = horizon;
    spectrum.history_times.reserve(checkpoints);
    spectrum.history.reserve(checkpoints);

    double cur = 0.0;
    for (int k = 0; k < checkpoints; ++k) {
        const double next = std::min(horizon, cur + interval);
        const Matrix flow = propagate_linear(gen, cur, next, options.step);
        const Matrix propagated = flow * q;
        Eigen::HouseholderQR<Matrix> qr(propagated);
        Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        q = qr.householderQ() * Matrix::Identity(n, n);
        for (int i = 0; i < n; ++i) {
            const double rii = std::abs(r(i, i));
            if (!(rii > 0.0) || !std::isfinite(rii))
                throw ConditioningError(
                    "spectrum_gram: Gram matrix numerically singular; retry with "
                    "re-orthonormalization interval " +
                        std::to_string(interval / 2),
                    interval / 2);
            accum[i] += std::log(rii);
        }
        cur = next;
        spectrum.history_times.push_back(cur);
        std::vector<double> running(n);
        for (int i = 0; i < n; ++i) running[i] = accum[i] / cur;
        spectrum.history.push_back(std::move(running));
    }

    std::vector<double> exponents(n);
    for (int i = 0; i < n; ++i) exponents[i] = accum[i] / horizon;

    // Slope of the running estimate over the trailing window.
    std::vector<double> slope(n, 0.0);
    const double window_start = horizon * (1.0 - options.window_fraction);
    int first = 0;
    while (first + 1 < static_cast<int>(spectrum.history_times.size()) &&
           spectrum.history_times[first] < window_start)
        ++first;
    const int last = static_cast<int>(spectrum.history_times.size()) - 1;
    if (last > first) {
        const double dt = spectrum.history_times[last] - spectrum.history_times[first];
        for (int i = 0; i < n; ++i)
            slope[i] = (spectrum.history[last][i] - spectrum.history[first][i]) / dt;
    }

    // Sort exponents descending, carrying the diagnostics along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return exponents[a] > exponents[b]; });
    spectrum.exponents.resize(n);
    spectrum.residual.resize(n);
    for (int i = 0; i < n; ++i) {
        spectrum.exponents[i] = exponents[order[i]];
        spectrum.residual[i] = slope[order[i]];
    }
    for (auto& running : spectrum.history) {
        std::vector<double> sorted(n);
        for (int i = 0; i < n; ++i) sorted[i] = running[order[i]];
        running = std::move(sorted);
    }
    return spectrum;
}

std::vector<double> decay_rates(const LyapunovSpectrum& spectrum)
{
    std::vector<double> rates;
    rates.reserve(spectrum.exponents.size());
    for (double lambda : spectrum.exponents) rates.push_back(-lambda);
    std::sort(rates.begin(), rates.end());
    return rates;
}

double matrix_norm(const Matrix& m, NormKind which)
{
    switch (which) {
    case NormKind::One: {
        double best = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            best = std::max(best, m.col(j).cwiseAbs().sum());
        return best;
    }
    case NormKind::Infinity: {
        double best = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            best = std::max(best, m.row(i).cwiseAbs().sum());
        return best;
    }
    case NormKind::Two: {
        Eigen::JacobiSVD<Matrix> svd(m);
        return svd.singularValues()(0);
    }
    }
    return 0.0;
}

LdEnvelope lozinskii_dahlquist_envelope(
    const std::function<RealMatrix(double)>& w_schedule, double horizon,
    NormKind norm, double quad_tol)
{
    if (horizon <= 0.0)
        throw StructuralError("lozinskii_dahlquist_envelope: horizon must be > 0");
    if (norm == NormKind::Two)
        throw StructuralError("lozinskii_dahlquist_envelope: only the 1- and "
                              "infinity-norms are supported");
    const bool transpose = (norm == NormKind::One);

    auto lower_integrand = [&](double s) {
        const RealMatrix w = w_schedule(s);
        const int d = static_cast<int>(w.rows());
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < d; ++i) {
            double sum = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                sum += std::abs(transpose ? w(j, i) : w(i, j));
            }
            best = std::min(best, w(i, i) - sum);
        }
        return best;
    };
    auto upper_integrand = [&](double s) {
        const RealMatrix w = w_schedule(s);
        const int d = static_cast<int>(w.rows());
        double best = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < d; ++i) {
            double sum = 0.0;
            for (int j = 0; j < d; ++j)
                sum += std::abs(transpose ? w(j, i) : w(i, j));
            best = std::max(best, w(i, i) + sum);
        }
        return best;
    };

    LdEnvelope envelope;
    envelope.lower = integrate(lower_integrand, 0.0, horizon, quad_tol) / horizon;
    envelope.upper = integrate(upper_integrand, 0.0, horizon, quad_tol) / horizon;
    return envelope;
}

} // namespace qme
