// positivity.cpp — Choi construction and positivity-class tests

#include "qme/positivity.hpp"

#include <cmath>

#include "qme/basis.hpp"
#include "qme/errors.hpp"
#include "qme/trajectory.hpp"

namespace qme {

ChoiMatrix choi_from_transfer(const Matrix& transfer,
                              const std::vector<Matrix>& basis)
{
    const int n = static_cast<int>(basis.size());
    if (n == 0 || transfer.rows() != n || transfer.cols() != n)
        throw StructuralError("choi_from_transfer: transfer/basis size mismatch");
    const int d = static_cast<int>(basis.front().rows());
    if (d * d != n)
        throw StructuralError("choi_from_transfer: basis must contain d^2 matrices");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Complex overlap = (basis[a].adjoint() * basis[b]).trace();
            const Complex expected = (a == b) ? Complex(1.0) : Complex(0.0);
            if (std::abs(overlap - expected) > 1e-10)
                throw StructuralError(
                    "choi_from_transfer: basis is not HS-orthonormal");
        }

    Matrix c = Matrix::Zero(d * d, d * d);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const Complex coeff = transfer(l, k);
            if (coeff != Complex(0.0))
                c += coeff * kron(basis[k].conjugate(), basis[l]);
        }
    return ChoiMatrix{d, std::move(c)};
}

ChoiMatrix choi_of(const Superoperator& f)
{
    const int d = f.d;
    Matrix c(d * d, d * d);
    // C_{(i,k),(j,l)} = <k| Phi[|i><j|] |l> = M_{(k,l),(i,j)} (row stacking).
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l)
                    c(i * d + k, j * d + l) = f.matrix(k * d + l, i * d + j);
    return ChoiMatrix{d, std::move(c)};
}

RealVector choi_spectrum(const ChoiMatrix& choi)
{
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(choi.matrix));
    if (eig.info() != Eigen::Success)
        throw ConsistencyError("choi_spectrum: eigensolver failed");
    return eig.eigenvalues();
}

CpResult cp_test(const ChoiMatrix& choi, double tol)
{
    const RealVector spectrum = choi_spectrum(choi);
    const double min_eig = spectrum(0);
    return CpResult{min_eig >= -tol, min_eig};
}

int k_positivity_bound(const ChoiMatrix& choi, double tol)
{
    const RealVector spectrum = choi_spectrum(choi);
    int negatives = 0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i)
        if (spectrum(i) < -tol) ++negatives;
    for (int k = choi.d; k >= 1; --k) {
        const int allowed = (choi.d - k) * (choi.d - k);
        if (negatives <= allowed) return k;
    }
    return 0;
}

SchwarzResult schwarz_falsifier(const GeneratorSpec& spec, double t,
                                int n_samples, std::uint64_t seed, double tol)
{
    Rng rng(seed);
    SchwarzResult result;
    const int d = spec.dim();
    for (int s = 0; s < n_samples; ++s) {
        const Matrix a = ginibre(d, d, rng);
        const Matrix lhs = apply_hs_adjoint(spec, t, a.adjoint() * a);
        const Matrix rhs = apply_hs_adjoint(spec, t, a.adjoint()) * a +
                           a.adjoint() * apply_hs_adjoint(spec, t, a);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(lhs - rhs));
        const double min_eig = eig.eigenvalues()(0);
        result.samples_used = s + 1;
        if (min_eig < -tol) {
            result.falsified = true;
            result.witness = a;
            result.min_eigenvalue = min_eig;
            return result;
        }
    }
    return result;
}

TwoPositiveResult two_positive_falsifier(
    const Superoperator& f, int n_samples, std::uint64_t seed, double tol,
    const std::vector<std::pair<Vector, Vector>>& seeds_uv)
{
    const int d = f.d;
    Rng rng(seed);
    TwoPositiveResult result;

    auto evaluate = [&](const Vector& u, const Vector& v) {
        if (u.size() != 2 * d || v.size() != 2 * d)
            throw StructuralError("two_positive_falsifier: vectors must live in C^{2d}");
        const Matrix big = u * u.adjoint();
        Matrix image(2 * d, 2 * d);
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj) {
                const Matrix block = big.block(bi * d, bj * d, d, d);
                image.block(bi * d, bj * d, d, d) =
                    unreshape(f.matrix * reshape(block));
            }
        return v.dot(image * v).real();
    };

    for (const auto& [u, v] : seeds_uv) {
        ++result.samples_used;
        const double value = evaluate(u, v);
        if (value < -tol) {
            result.falsified = true;
            result.witness_u = u;
            result.witness_v = v;
            result.value = value;
            return result;
        }
    }
    for (int s = 0; s < n_samples; ++s) {
        const Vector u = random_unit_vector(2 * d, rng);
        const Vector v = random_unit_vector(2 * d, rng);
        ++result.samples_used;
        const double value = evaluate(u, v);
        if (value < -tol) {
            result.falsified = true;
            result.witness_u = u;
            result.witness_v = v;
            result.value = value;
            return result;
        }
    }
    return result;
}

LgksResult lgks_sign_test(const GeneratorSpec& spec, double horizon, int n_times,
                          double tol)
{
    if (!validate_canonical(spec).ok())
        throw UnsupportedFormError(
            "lgks_sign_test: spec is not canonical; canonicalize first");
    if (n_times < 1 || horizon < 0.0)
        throw StructuralError("lgks_sign_test: bad grid");
    LgksResult result;
    for (int k = 0; k < n_times; ++k) {
        const double t = (n_times == 1) ? horizon
                                        : horizon * k / (n_times - 1);
        const auto couplings = spec.couplings_at(t);
        for (std::size_t l = 0; l < couplings.size(); ++l) {
            if (couplings[l] < -tol) {
                result.holds = false;
                result.t = t;
                result.channel = static_cast<int>(l);
                result.value = couplings[l];
                return result;
            }
        }
    }
    return result;
}

PositiveFrameResult positive_falsifier(const GeneratorSpec& spec, double t,
                                       int n_frames, std::uint64_t seed, double tol)
{
    Rng rng(seed);
    PositiveFrameResult result;
    const int d = spec.dim();
    for (int s = 0; s < n_frames; ++s) {
        const auto frame = (s == 0) ? computational_frame(d) : haar_frame(d, rng);
        const KossakowskiReport report = kossakowski_check(spec, t, frame, tol);
        result.frames_tested = s + 1;
        if (!report.pass) {
            result.falsified = true;
            result.frame_index = s;
            const auto& [i, j, value] = report.offending.front();
            result.entry_i = i;
            result.entry_j = j;
            result.value = value;
            result.witness_projector = frame[static_cast<std::size_t>(j)];
            return result;
        }
    }
    return result;
}

ClassVerdict classify(const GeneratorSpec& spec, double t,
                      const ClassifyOptions& options)
{
    ClassVerdict verdict;
    verdict.t = t;
    verdict.options = options;

    const GeneratorSpec canonical =
        validate_canonical(spec).ok() ? spec : canonicalize(spec);
    verdict.lgks = lgks_sign_test(canonical, t, /*n_times=*/201, options.tol);

    const Superoperator f = propagate(spec, 0.0, t, options.step);
    const ChoiMatrix choi = choi_of(f);
    verdict.choi_eigenvalues = choi_spectrum(choi);
    verdict.cp = cp_test(choi, options.tol);
    verdict.k_positive_upper = k_positivity_bound(choi, options.tol);

    verdict.schwarz = schwarz_falsifier(canonical, t, options.n_samples,
                                        options.seed, options.tol);

    // Seed the two-positive sampler with the Choi witness when one exists
    // (for d = 2 the maximally entangled input makes it exact).
    std::vector<std::pair<Vector, Vector>> seeds;
    if (spec.dim() == 2 && verdict.cp.min_eigenvalue < -options.tol) {
        Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(choi.matrix));
        Vector u(4);
        u << 1, 0, 0, 1;
        seeds.emplace_back(u, eig.eigenvectors().col(0));
    }
    verdict.two_positive = two_positive_falsifier(f, options.n_samples,
                                                  options.seed + 1, options.tol, seeds);

    verdict.positive = positive_falsifier(canonical, t, options.n_frames,
                                          options.seed + 2, options.tol);

    // Hierarchy consistency. cp and two_positive test the same map, so CP
    // must never coexist with a two-positive witness. The Schwarz and
    // positivity falsifiers probe the instantaneous generator; they are only
    // bound to the map verdict when the generator is frozen and its
    // couplings are nonnegative (then the semigroup is CP at every time).
    if (verdict.cp.yes && verdict.two_positive.falsified)
        throw ConsistencyError(
            "classify: CP map contradicted by a two-positive witness");
    if (spec.time_autonomous() && verdict.lgks.holds && verdict.cp.yes &&
        (verdict.schwarz.falsified || verdict.positive.falsified))
        throw ConsistencyError(
            "classify: nonnegative-coupling generator contradicted by a "
            "generator-level falsifier");
    return verdict;
}

} // namespace qme
