// basis.hpp — Pauli matrices and Hilbert-Schmidt orthonormal Hermitian bases

#pragma once

#include <vector>

#include "qme/types.hpp"

namespace qme {

Matrix pauli(int i);        // i in 0..3, pauli(0) = identity
Matrix sigma_plus();        // (sigma_1 + i sigma_2)/2
Matrix sigma_minus();       // (sigma_1 - i sigma_2)/2

// Hermitian basis of M_d(C), orthonormal in the Hilbert-Schmidt inner product.
// Element 0 is 1/sqrt(d); then for each index pair j<k the symmetric and
// antisymmetric generalized Gell-Mann matrices, then the d-1 diagonal ones.
// For d=2 this is exactly {1, sigma_1, sigma_2, sigma_3}/sqrt(2).
std::vector<Matrix> hermitian_basis(int d);

// The d-1 + ... traceless part of hermitian_basis (elements 1..d^2-1).
std::vector<Matrix> traceless_hermitian_basis(int d);

} // namespace qme
