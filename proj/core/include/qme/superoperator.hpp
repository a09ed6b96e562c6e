// superoperator.hpp — Vectorization, reshaped generators and propagators

#pragma once

#include <cstddef>
#include <functional>

#include "qme/generator.hpp"
#include "qme/types.hpp"

namespace qme {

// d^2 x d^2 matrix acting on row-stacked operators.
struct Superoperator {
    int d = 0;
    Matrix matrix;
};

// Row-stacking vectorization and its inverse.
Vector reshape(const Matrix& op);
Matrix unreshape(const Vector& v);

// Reshaped generator
//   -i(H x 1 - 1 x H^T)
//   + sum_l c_l (L x conj(L) - (L^dag L x 1 + 1 x L^T conj(L))/2).
Superoperator build_superoperator(const GeneratorSpec& spec, double t);

// Step controller for the midpoint-Magnus propagator. The local error is the
// entrywise step-doubling estimate; steps halve until it drops below tol.
// Accepted steps advance with the Richardson-extrapolated composition.
struct StepControl {
    double tol = 1e-10;
    double min_step = 1e-13;
    std::size_t max_steps = 4'000'000;
};

// Time-ordered propagator of a generic linear ODE x' = A(t) x between s and t.
// Each substep is the exponential of the midpoint-evaluated generator, so the
// result is exact in one step for time-autonomous generators.
Matrix propagate_linear(const std::function<Matrix(double)>& generator,
                        double s, double t, const StepControl& ctrl = {});

// F(t, s) for the reshaped master equation; t >= s.
Superoperator propagate(const GeneratorSpec& spec, double s, double t,
                        const StepControl& ctrl = {});

// Transfer matrix of F in the Hermitian (Pauli / generalized Gell-Mann)
// basis; entry (i,j) = Re <B_i, F[B_j]>. First row is (1, 0, ...) for
// trace-preserving maps.
RealMatrix pauli_transfer_matrix(const Superoperator& f);

// Time-averaged trace of the reshaped generator, (1/T) int_0^T Tr L(s) ds.
// Equals (1/T) log det F(T, 0); nonpositive for positive semigroups.
double volume_rate(const GeneratorSpec& spec, double horizon,
                   double quad_tol = 1e-12);

// log |det M| via LU with partial pivoting, accumulated in log space.
double log_abs_det(const Matrix& m);

// Scaling-and-squaring Pade approximant (Eigen MatrixFunctions).
Matrix matrix_exponential(const Matrix& a);

} // namespace qme
