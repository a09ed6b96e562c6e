// random.cpp — Seeded samplers

#include "qme/random.hpp"

#include <cmath>

namespace qme {

Matrix ginibre(int rows, int cols, Rng& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = Complex(gauss(rng), gauss(rng)) * inv_sqrt2;
    return g;
}

Matrix haar_unitary(int d, Rng& rng)
{
    Matrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    Matrix r = q.adjoint() * g;
    // Fix phases so the distribution is Haar, not just QR-unique.
    for (int i = 0; i < d; ++i) {
        Complex diag = r(i, i);
        double mag = std::abs(diag);
        q.col(i) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
    }
    return q;
}

Matrix random_hermitian(int d, Rng& rng)
{
    Matrix g = ginibre(d, d, rng);
    return 0.5 * (g + g.adjoint());
}

Matrix random_density(int d, Rng& rng)
{
    Matrix g = ginibre(d, d, rng);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace();
}

Vector random_unit_vector(int d, Rng& rng)
{
    Vector v = ginibre(d, 1, rng).col(0);
    return v / v.norm();
}

std::vector<Matrix> computational_frame(int d)
{
    std::vector<Matrix> frame;
    frame.reserve(d);
    for (int i = 0; i < d; ++i) {
        Matrix p = Matrix::Zero(d, d);
        p(i, i) = 1.0;
        frame.push_back(p);
    }
    return frame;
}

std::vector<Matrix> haar_frame(int d, Rng& rng)
{
    Matrix u = haar_unitary(d, rng);
    std::vector<Matrix> frame;
    frame.reserve(d);
    for (int i = 0; i < d; ++i)
        frame.push_back(u.col(i) * u.col(i).adjoint());
    return frame;
}

} // namespace qme
