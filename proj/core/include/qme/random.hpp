// random.hpp — Seeded samplers for matrices, unitaries, states and frames

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qme/types.hpp"

namespace qme {

using Rng = std::mt19937_64;

// Complex Ginibre matrix: i.i.d. standard complex normal entries.
Matrix ginibre(int rows, int cols, Rng& rng);

// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
Matrix haar_unitary(int d, Rng& rng);

// GUE-normalized random Hermitian matrix.
Matrix random_hermitian(int d, Rng& rng);

// Random full-rank density matrix G G^dagger / Tr(G G^dagger).
Matrix random_density(int d, Rng& rng);

// Random unit vector in C^d.
Vector random_unit_vector(int d, Rng& rng);

// Complete orthonormal rank-one projector frames.
std::vector<Matrix> computational_frame(int d);
std::vector<Matrix> haar_frame(int d, Rng& rng);

} // namespace qme
