// superoperator.cpp — Reshaping, generator assembly and Magnus propagation

#include "qme/superoperator.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "qme/basis.hpp"
#include "qme/errors.hpp"
#include "qme/quadrature.hpp"

namespace qme {

namespace {
const Complex kI{0.0, 1.0};
}

Vector reshape(const Matrix& op)
{
    const Eigen::Index d = op.rows();
    if (op.cols() != d) throw StructuralError("reshape: operator must be square");
    Vector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            v(i * d + j) = op(i, j);
    return v;
}

Matrix unreshape(const Vector& v)
{
    const auto n = v.size();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n)
        throw StructuralError("unreshape: length " + std::to_string(n) +
                              " is not a perfect square");
    Matrix op(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            op(i, j) = v(i * d + j);
    return op;
}

Superoperator build_superoperator(const GeneratorSpec& spec, double t)
{
    const int d = spec.dim();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix& h = spec.hamiltonian();

    Matrix m = -kI * (kron(h, id) - kron(id, h.transpose()));
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const double c = spec.jumps()[l].coupling(t);
        if (c == 0.0) continue;
        const Matrix& jump = spec.jumps()[l].matrix;
        const Matrix& ldl = spec.jump_ldag_l(l);
        m += c * (kron(jump, jump.conjugate()) -
                  0.5 * (kron(ldl, id) + kron(id, ldl.transpose())));
    }
    return Superoperator{d, std::move(m)};
}

Matrix matrix_exponential(const Matrix& a) { return a.exp(); }

Matrix propagate_linear(const std::function<Matrix(double)>& generator,
                        double s, double t, const StepControl& ctrl)
{
    if (t < s) throw StructuralError("propagate_linear: requires t >= s");
    const Matrix probe = generator(s);
    const Eigen::Index n = probe.rows();
    Matrix flow = Matrix::Identity(n, n);
    if (t == s) return flow;

    double cur = s;
    double h = t - s;
    std::size_t steps = 0;
    while (cur < t) {
        h = std::min(h, t - cur);
        if (++steps > ctrl.max_steps)
            throw IntegrationError("propagate_linear: step budget exhausted before t");

        const Matrix full = matrix_exponential(h * generator(cur + 0.5 * h));
        const Matrix half_a = matrix_exponential(0.5 * h * generator(cur + 0.25 * h));
        const Matrix half_b = matrix_exponential(0.5 * h * generator(cur + 0.75 * h));
        const Matrix fine = half_b * half_a;
        const double err = (full - fine).cwiseAbs().maxCoeff();

        if (err <= ctrl.tol) {
            // Advance with the extrapolated step; the leading h^3 error of
            // the midpoint rule cancels, and the trace-preserving left
            // kernel survives the linear combination.
            flow = ((4.0 * fine - full) / 3.0) * flow;
            cur += h;
            if (err < 0.03125 * ctrl.tol) h *= 2.0;
        } else {
            h *= 0.5;
            if (h < ctrl.min_step)
                throw IntegrationError(
                    "propagate_linear: step controller failed to meet tolerance " +
                    std::to_string(ctrl.tol));
        }
    }
    return flow;
}

Superoperator propagate(const GeneratorSpec& spec, double s, double t,
                        const StepControl& ctrl)
{
    if (t < s) throw StructuralError("propagate: requires t >= s");
    if (spec.time_autonomous()) {
        // Single exact step.
        const Matrix m = build_superoperator(spec, s).matrix;
        return Superoperator{spec.dim(), matrix_exponential((t - s) * m)};
    }
    auto gen = [&spec](double u) { return build_superoperator(spec, u).matrix; };
    return Superoperator{spec.dim(), propagate_linear(gen, s, t, ctrl)};
}

RealMatrix pauli_transfer_matrix(const Superoperator& f)
{
    const int d = f.d;
    const auto basis = hermitian_basis(d);
    const int n = d * d;
    RealMatrix transfer(n, n);
    std::vector<Vector> vecs(basis.size());
    for (int j = 0; j < n; ++j) vecs[j] = reshape(basis[j]);
    for (int j = 0; j < n; ++j) {
        const Vector image = f.matrix * vecs[j];
        for (int i = 0; i < n; ++i)
            transfer(i, j) = vecs[i].dot(image).real();
    }
    return transfer;
}

double volume_rate(const GeneratorSpec& spec, double horizon, double quad_tol)
{
    if (horizon <= 0.0) throw StructuralError("volume_rate: horizon must be > 0");
    const double total = integrate(
        [&spec](double u) { return generator_trace(spec, u); }, 0.0, horizon, quad_tol);
    return total / horizon;
}

double log_abs_det(const Matrix& m)
{
    Eigen::PartialPivLU<Matrix> lu(m);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        log_det += std::log(std::abs(lu.matrixLU()(i, i)));
    return log_det;
}

} // namespace qme
