// basis.cpp — Pauli matrices and generalized Gell-Mann bases

#include "qme/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "qme/errors.hpp"

namespace qme {

namespace {
const Complex kI{0.0, 1.0};
}

Matrix pauli(int i)
{
    Matrix m(2, 2);
    switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw StructuralError("pauli: index must be in 0..3");
    }
    return m;
}

Matrix sigma_plus() { return 0.5 * (pauli(1) + kI * pauli(2)); }

Matrix sigma_minus() { return 0.5 * (pauli(1) - kI * pauli(2)); }

std::vector<Matrix> hermitian_basis(int d)
{
    if (d < 1) throw StructuralError("hermitian_basis: d must be positive");
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);

    basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Matrix sym = Matrix::Zero(d, d);
            sym(j, k) = inv_sqrt2;
            sym(k, j) = inv_sqrt2;
            basis.push_back(sym);

            Matrix asym = Matrix::Zero(d, d);
            asym(j, k) = -kI * inv_sqrt2;
            asym(k, j) = kI * inv_sqrt2;
            basis.push_back(asym);
        }
    }
    for (int l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int m = 0; m < l; ++m) diag(m, m) = norm;
        diag(l, l) = -static_cast<double>(l) * norm;
        basis.push_back(diag);
    }
    return basis;
}

std::vector<Matrix> traceless_hermitian_basis(int d)
{
    auto basis = hermitian_basis(d);
    basis.erase(basis.begin());
    return basis;
}

} // namespace qme
