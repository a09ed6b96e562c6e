// positivity.hpp — Choi matrices, positivity-class tests and falsifiers

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qme/generator.hpp"
#include "qme/random.hpp"
#include "qme/superoperator.hpp"
#include "qme/types.hpp"

namespace qme {

inline constexpr double kEigenvalueTol = 1e-9;

struct ChoiMatrix {
    int d = 0;
    Matrix matrix; // d^2 x d^2, self-adjoint
};

// Choi matrix from a transfer matrix R expressed in an HS-orthonormal matrix
// basis {B_k}: C = sum_{k,l} R(l,k) conj(B_k) x B_l. For the Pauli basis and
// d = 2 this is the familiar sum F_ji/2 sigma-bar_i x sigma_j.
ChoiMatrix choi_from_transfer(const Matrix& transfer,
                              const std::vector<Matrix>& basis);

// Choi matrix of a reshaped map: C = sum_ij |i><j| x Phi[|i><j|].
ChoiMatrix choi_of(const Superoperator& f);

// Ascending eigenvalues of the (hermitized) Choi matrix.
RealVector choi_spectrum(const ChoiMatrix& choi);

struct CpResult {
    bool yes = false;
    double min_eigenvalue = 0.0;
};

// Complete positivity holds iff the Choi spectrum is nonnegative.
CpResult cp_test(const ChoiMatrix& choi, double tol = kEigenvalueTol);

// Largest k consistent with the negative-eigenvalue count: the Choi matrix
// of a k-positive map has at most (d-k)^2 negative eigenvalues. Never a
// certificate, only an upper bound on the positivity index; k = 0 means even
// 1-positivity is excluded by the count.
int k_positivity_bound(const ChoiMatrix& choi, double tol = kEigenvalueTol);

struct SchwarzResult {
    bool falsified = false;
    int samples_used = 0;
    Matrix witness;                // sampled A with violating dissipation matrix
    double min_eigenvalue = 0.0;   // of L^adj[A^dag A] - L^adj[A^dag]A - A^dag L^adj[A]
};

// Samples Ginibre operators A and checks the Schwarz dissipativity condition
// of the generator at time t. "not falsified" is never a certificate.
SchwarzResult schwarz_falsifier(const GeneratorSpec& spec, double t,
                                int n_samples, std::uint64_t seed,
                                double tol = kEigenvalueTol);

struct TwoPositiveResult {
    bool falsified = false;
    int samples_used = 0;
    Vector witness_u; // rank-one positive input uu^dag in M_{2d}
    Vector witness_v; // test vector
    double value = 0.0;
};

// Samples rank-one positive inputs uu^dag in M_{2d} and test vectors v and
// checks <v, (Id_2 x Phi)[uu^dag] v> >= -tol. Optional seeds are tried
// before random sampling.
TwoPositiveResult two_positive_falsifier(
    const Superoperator& f, int n_samples, std::uint64_t seed,
    double tol = kEigenvalueTol,
    const std::vector<std::pair<Vector, Vector>>& seeds_uv = {});

struct LgksResult {
    bool holds = true;
    double t = 0.0;
    int channel = -1;
    double value = 0.0;
};

// Scans the canonical couplings on a time grid and reports the first
// negative one. The spec must be in canonical form.
LgksResult lgks_sign_test(const GeneratorSpec& spec, double horizon,
                          int n_times, double tol = kEigenvalueTol);

struct PositiveFrameResult {
    bool falsified = false;
    int frames_tested = 0;
    int frame_index = -1;
    Matrix witness_projector;
    int entry_i = -1, entry_j = -1;
    double value = 0.0;
};

// Kossakowski sampling over Haar-random projector frames at time t; a
// negative off-diagonal matrix element falsifies positivity of the
// generated semigroup.
PositiveFrameResult positive_falsifier(const GeneratorSpec& spec, double t,
                                       int n_frames, std::uint64_t seed,
                                       double tol = kEigenvalueTol);

struct ClassifyOptions {
    int n_samples = 500;
    int n_frames = 200;
    std::uint64_t seed = 1;
    double tol = kEigenvalueTol;
    StepControl step;
};

struct ClassVerdict {
    double t = 0.0;
    LgksResult lgks;
    CpResult cp;
    RealVector choi_eigenvalues;
    int k_positive_upper = 0;
    SchwarzResult schwarz;
    TwoPositiveResult two_positive;
    PositiveFrameResult positive;
    ClassifyOptions options;
};

// Full classification pipeline at time t: canonical sign test, Choi-based CP
// test with the k-positivity bound, and the sampled Schwarz / two-positive /
// positivity falsifiers. Requires a canonicalizable spec. Enforces that a
// CP-positive verdict is not contradicted by any falsifier.
ClassVerdict classify(const GeneratorSpec& spec, double t,
                      const ClassifyOptions& options = {});

} // namespace qme
