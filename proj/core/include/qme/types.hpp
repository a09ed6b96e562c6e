// types.hpp — Common scalar/matrix aliases and small dense-matrix helpers

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qme {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

inline double hermiticity_residual(const Matrix& a)
{
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline double max_abs(const Matrix& a)
{
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

} // namespace qme
