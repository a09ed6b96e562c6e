// trajectory.hpp — Eigenvalue/eigenvector flow and the embedded classical
// master equation

#pragma once

#include <cstddef>
#include <functional>
#include <tuple>
#include <vector>

#include "qme/generator.hpp"
#include "qme/superoperator.hpp"
#include "qme/types.hpp"

namespace qme {

// Time-sampled solution with continuously labeled eigenpairs. frames[k] is
// unitary; its columns are the instantaneous eigenvectors matching the
// entries of populations[k].
struct Trajectory {
    GeneratorSpec spec;
    std::vector<double> times;
    std::vector<Matrix> states;
    std::vector<RealVector> populations;
    std::vector<Matrix> frames;
    std::vector<std::size_t> degenerate_samples;  // gap below threshold
    std::vector<std::size_t> crossing_samples;    // label order changed
};

// Propagates rho0 through the sample times and tracks eigenpairs by maximal
// overlap with the previous sample; inside numerically degenerate clusters
// the subspace basis is aligned by orthogonal Procrustes.
Trajectory evolve_trajectory(const GeneratorSpec& spec, const Matrix& rho0,
                             std::vector<double> times,
                             const StepControl& ctrl = {});

// Real d x d matrix with zero column sums.
struct ClassicalGenerator {
    int d = 0;
    RealMatrix matrix;
};

// W_ij = <phi_i, L[phi_j phi_j^dag] phi_i> for i != j, diagonal fixed to the
// negative column sums. For canonical specs the off-diagonals are
// cross-checked against sum_l c_l |<phi_i, L_l phi_j>|^2.
ClassicalGenerator embedded_w(const Trajectory& traj, std::size_t k);

struct KossakowskiReport {
    bool pass = true;
    RealMatrix matrix;                                   // Tr(P_i L[P_j])
    std::vector<std::tuple<int, int, double>> offending; // negative off-diagonals
};

// Evaluates the generator on a complete orthonormal projector frame and
// checks nonnegative off-diagonals plus the zero-column-sum identity.
KossakowskiReport kossakowski_check(const GeneratorSpec& spec, double t,
                                    const std::vector<Matrix>& frame,
                                    double tol = 1e-9);

// Propagates a probability (or signed) vector through p' = G(t) p.
RealVector classical_propagate(const std::function<RealMatrix(double)>& generator,
                               const RealVector& p0, double t,
                               const StepControl& ctrl = {});

enum class TraceInequalityKind { TwoPositive, Schwarz };

// Per-sample margins Tr W - (1/d) Tr L (two-positive) or
// Tr W - (2/(d+1)) Tr L (Schwarz); nonnegative when the semigroup belongs to
// the corresponding class.
struct TraceInequalityMargins {
    TraceInequalityKind kind;
    std::vector<double> margins;
    std::vector<double> trace_w;
    std::vector<double> trace_generator;
};

TraceInequalityMargins trace_inequality_check(const Trajectory& traj,
                                              TraceInequalityKind kind);

} // namespace qme
