// support.hpp — Shared helpers for the test suites

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qme/basis.hpp"
#include "qme/generator.hpp"
#include "qme/random.hpp"
#include "qme/types.hpp"

namespace qme::test {

inline bool near(const Matrix& a, const Matrix& b, double tol)
{
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Random canonical spec: jumps are a Haar-rotated subset of the traceless
// Gell-Mann basis, so they stay traceless and HS-orthonormal by construction.
inline GeneratorSpec random_canonical_spec(int d, int channels, double cmax,
                                           bool nonnegative, Rng& rng)
{
    const auto gell_mann = traceless_hermitian_basis(d);
    const Matrix mixer = haar_unitary(static_cast<int>(gell_mann.size()), rng);
    std::uniform_real_distribution<double> coupling(nonnegative ? 0.0 : -cmax, cmax);

    std::vector<Jump> jumps;
    for (int l = 0; l < channels; ++l) {
        Matrix jump = Matrix::Zero(d, d);
        for (std::size_t k = 0; k < gell_mann.size(); ++k)
            jump += mixer(static_cast<Eigen::Index>(k), l) * gell_mann[k];
        jumps.push_back({jump, CouplingSchedule::constant(coupling(rng))});
    }
    Matrix h = random_hermitian(d, rng);
    return GeneratorSpec(d, h, std::move(jumps), /*canonical_flag=*/true);
}

} // namespace qme::test
