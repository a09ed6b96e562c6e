// trajectory.cpp — Spectral flow, embedded classical generator, Kossakowski

#include "qme/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qme/errors.hpp"

namespace qme {

namespace {

constexpr double kDegenerateGap = 1e-8;
constexpr double kAmbiguousOverlap = 0.70710678118654752; // cos(45 deg)

// Greedy maximal-|overlap| assignment of new eigenvector columns to previous
// labels. Returns perm with perm[previous_label] = new_column.
std::vector<int> match_columns(const Matrix& overlaps, bool& ambiguous)
{
    const int d = static_cast<int>(overlaps.rows());
    std::vector<int> perm(d, -1);
    std::vector<bool> row_used(d, false), col_used(d, false);
    ambiguous = false;
    for (int pick = 0; pick < d; ++pick) {
        int best_i = -1, best_j = -1;
        double best = -1.0;
        for (int i = 0; i < d; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (col_used[j]) continue;
                const double a = std::abs(overlaps(i, j));
                if (a > best) {
                    best = a;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        perm[best_i] = best_j;
        row_used[best_i] = true;
        col_used[best_j] = true;
        if (best < kAmbiguousOverlap) ambiguous = true;
    }
    return perm;
}

// Aligns the subspace spanned by the selected columns of `frame` with the
// same columns of `previous` without leaving the subspace.
void procrustes_align(Matrix& frame, const Matrix& previous,
                      const std::vector<int>& cluster)
{
    const int m = static_cast<int>(cluster.size());
    if (m < 2) return;
    const auto d = frame.rows();
    Matrix a(d, m), b(d, m);
    for (int c = 0; c < m; ++c) {
        a.col(c) = frame.col(cluster[c]);
        b.col(c) = previous.col(cluster[c]);
    }
    Eigen::JacobiSVD<Matrix> svd(a.adjoint() * b,
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix rotated = a * (svd.matrixU() * svd.matrixV().adjoint());
    for (int c = 0; c < m; ++c) frame.col(cluster[c]) = rotated.col(c);
}

} // namespace

Trajectory evolve_trajectory(const GeneratorSpec& spec, const Matrix& rho0,
                             std::vector<double> times, const StepControl& ctrl)
{
    const int d = spec.dim();
    if (rho0.rows() != d || rho0.cols() != d)
        throw StructuralError("evolve_trajectory: initial state dimension mismatch");
    if (hermiticity_residual(rho0) > 1e-8 * std::max(1.0, max_abs(rho0)))
        throw StructuralError("evolve_trajectory: initial state is not self-adjoint");
    if (std::abs(rho0.trace().real() - 1.0) > 1e-8 || std::abs(rho0.trace().imag()) > 1e-8)
        throw StructuralError("evolve_trajectory: initial state must have unit trace");
    if (times.empty())
        throw StructuralError("evolve_trajectory: need at least one sample time");
    if (!std::is_sorted(times.begin(), times.end()))
        throw StructuralError("evolve_trajectory: sample times must be increasing");

    Trajectory traj{spec, std::move(times), {}, {}, {}, {}, {}};
    const std::size_t n = traj.times.size();
    traj.states.reserve(n);
    traj.populations.reserve(n);
    traj.frames.reserve(n);

    Matrix state = rho0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const Superoperator f =
                propagate(spec, traj.times[k - 1], traj.times[k], ctrl);
            state = unreshape(f.matrix * reshape(state));
        }
        const Matrix herm = hermitize(state);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
        if (eig.info() != Eigen::Success)
            throw ConsistencyError("evolve_trajectory: eigendecomposition failed at sample " +
                                   std::to_string(k));

        RealVector vals = eig.eigenvalues();
        Matrix vecs = eig.eigenvectors();

        RealVector pops(d);
        Matrix frame(d, d);
        if (k == 0) {
            // Initial labels: descending population.
            for (int i = 0; i < d; ++i) {
                pops(i) = vals(d - 1 - i);
                frame.col(i) = vecs.col(d - 1 - i);
            }
        } else {
            const Matrix& prev = traj.frames.back();
            bool ambiguous = false;
            const std::vector<int> perm = match_columns(prev.adjoint() * vecs, ambiguous);
            for (int i = 0; i < d; ++i) {
                pops(i) = vals(perm[i]);
                frame.col(i) = vecs.col(perm[i]);
            }
            if (ambiguous) traj.degenerate_samples.push_back(k);

            // Ascending eigenvalue order changed relative to the labels
            // carried over: record a crossing.
            for (int i = 0; i + 1 < d; ++i)
                if (perm[i] < perm[i + 1]) {
                    traj.crossing_samples.push_back(k);
                    break;
                }

            // Degenerate clusters are found in sorted eigenvalue order, then
            // mapped back to labels and aligned with the previous frame.
            std::vector<int> inverse(d);
            for (int i = 0; i < d; ++i) inverse[perm[i]] = i;
            std::vector<int> cluster{inverse[0]};
            auto flush = [&]() {
                if (cluster.size() > 1) {
                    procrustes_align(frame, prev, cluster);
                    traj.degenerate_samples.push_back(k);
                }
            };
            for (int c = 1; c <= d; ++c) {
                if (c < d && std::abs(vals(c) - vals(c - 1)) <
                                 kDegenerateGap * std::max(1.0, std::abs(vals(c)))) {
                    cluster.push_back(inverse[c]);
                } else {
                    flush();
                    if (c < d) cluster.assign(1, inverse[c]);
                }
            }

            // Phase fix: overlap with the previous label is real positive.
            for (int i = 0; i < d; ++i) {
                const Complex overlap = prev.col(i).dot(frame.col(i));
                const double mag = std::abs(overlap);
                if (mag > 0.0) frame.col(i) *= overlap / mag;
            }
        }

        traj.states.push_back(state);
        traj.populations.push_back(std::move(pops));
        traj.frames.push_back(std::move(frame));
    }

    // Deduplicate warning indices.
    auto dedup = [](std::vector<std::size_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(traj.degenerate_samples);
    dedup(traj.crossing_samples);
    return traj;
}

ClassicalGenerator embedded_w(const Trajectory& traj, std::size_t k)
{
    if (k >= traj.times.size())
        throw StructuralError("embedded_w: sample index out of range");
    const int d = traj.spec.dim();
    const double t = traj.times[k];
    const Matrix& frame = traj.frames[k];

    RealMatrix w = RealMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const Matrix projector = frame.col(j) * frame.col(j).adjoint();
        const Matrix image = apply_generator(traj.spec, t, projector);
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            w(i, j) = frame.col(i).dot(image * frame.col(i)).real();
        }
    }
    for (int j = 0; j < d; ++j) {
        double col = 0.0;
        for (int i = 0; i < d; ++i)
            if (i != j) col += w(i, j);
        w(j, j) = -col;
    }

    // Canonical specs admit the channel-resolved rate formula; the two
    // routes must agree.
    if (traj.spec.canonical_flag()) {
        const auto couplings = traj.spec.couplings_at(t);
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                double rate = 0.0;
                for (std::size_t l = 0; l < traj.spec.jumps().size(); ++l) {
                    const Complex amp =
                        frame.col(i).dot(traj.spec.jumps()[l].matrix * frame.col(j));
                    rate += couplings[l] * std::norm(amp);
                }
                worst = std::max(worst, std::abs(rate - w(i, j)));
            }
        }
        const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
        if (worst > 1e-8 * scale)
            throw ConsistencyError(
                "embedded_w: projector and rate formulas disagree by " +
                std::to_string(worst) + " at t = " + std::to_string(t));
    }
    return ClassicalGenerator{d, std::move(w)};
}

KossakowskiReport kossakowski_check(const GeneratorSpec& spec, double t,
                                    const std::vector<Matrix>& frame, double tol)
{
    const int d = spec.dim();
    if (frame.size() != static_cast<std::size_t>(d))
        throw StructuralError("kossakowski_check: frame must contain d projectors");
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (frame[i].rows() != d || frame[i].cols() != d)
            throw StructuralError("kossakowski_check: projector dimension mismatch");
        for (std::size_t j = 0; j < frame.size(); ++j) {
            const Matrix prod = frame[i] * frame[j];
            const Matrix expected = (i == j) ? frame[i] : Matrix::Zero(d, d);
            if (max_abs(prod - expected) > 1e-10)
                throw StructuralError("kossakowski_check: frame is not orthogonal");
        }
        sum += frame[i];
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > 1e-10)
        throw StructuralError("kossakowski_check: frame is not complete");

    KossakowskiReport report;
    report.matrix.resize(d, d);
    for (int j = 0; j < d; ++j) {
        const Matrix image = apply_generator(spec, t, frame[j]);
        for (int i = 0; i < d; ++i)
            report.matrix(i, j) = (frame[i] * image).trace().real();
    }
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            if (report.matrix(i, j) < -tol) {
                report.pass = false;
                report.offending.emplace_back(i, j, report.matrix(i, j));
            }
        }
        // Zero-column-sum identity, a consequence of trace preservation.
        const double col = report.matrix.col(j).sum();
        if (std::abs(col) > 1e-8 * std::max(1.0, report.matrix.cwiseAbs().maxCoeff())) {
            report.pass = false;
            report.offending.emplace_back(j, j, col);
        }
    }
    return report;
}

RealVector classical_propagate(const std::function<RealMatrix(double)>& generator,
                               const RealVector& p0, double t, const StepControl& ctrl)
{
    auto complex_gen = [&generator](double u) -> Matrix {
        return generator(u).cast<Complex>();
    };
    const Matrix flow = propagate_linear(complex_gen, 0.0, t, ctrl);
    return (flow * p0.cast<Complex>()).real();
}

TraceInequalityMargins trace_inequality_check(const Trajectory& traj,
                                              TraceInequalityKind kind)
{
    const int d = traj.spec.dim();
    const double prefactor =
        (kind == TraceInequalityKind::TwoPositive) ? 1.0 / d : 2.0 / (d + 1);
    TraceInequalityMargins out{kind, {}, {}, {}};
    out.margins.reserve(traj.times.size());
    out.trace_w.reserve(traj.times.size());
    out.trace_generator.reserve(traj.times.size());
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const double tr_w = embedded_w(traj, k).matrix.trace();
        const double tr_gen = generator_trace(traj.spec, traj.times[k]);
        out.trace_w.push_back(tr_w);
        out.trace_generator.push_back(tr_gen);
        out.margins.push_back(tr_w - prefactor * tr_gen);
    }
    return out;
}

} // namespace qme
