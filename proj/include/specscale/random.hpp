#pragma once

#include <cstdint>
#include <random>

#include "specscale/linalg.hpp"

namespace specscale {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream, index); used so every test case
/// draws the same numbers regardless of evaluation order.
Rng case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix random_gaussian(Eigen::Index n, Rng& rng);

/// (G + G*) / 2, exactly Hermitian.
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);

/// Q factor of a complex Gaussian matrix with the phases of R's diagonal
/// absorbed (Haar distributed).
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

/// U diag(z) U* with complex Gaussian z.
ComplexMatrix random_normal(Eigen::Index n, Rng& rng);

CartesianPair random_hermitian_pair(Eigen::Index n, Rng& rng);

/// A1 = W diag(a, 0) W*, A2 = W diag(b, 0) W*: both annihilate the last
/// column of W, so det(A1 + lambda A2) vanishes identically.
CartesianPair random_singular_pair(Eigen::Index n, Rng& rng);

Direction2 random_direction(Rng& rng);
Vec3 random_unit3(Rng& rng);

}  // namespace specscale
