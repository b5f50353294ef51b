#pragma once

// Seeded generators for test data: Gaussian matrices, subspaces, frames and
// orthogonal matrices. Used by the test suites and the `generate` command.

#include <cstdint>
#include <random>

#include "obliq/linalg.hpp"

namespace obliq::random {

using Engine = std::mt19937_64;

Matrix gaussian(Engine& rng, Index rows, Index cols);

/// Gaussian unit vector in R^n.
Vector unit_vector(Engine& rng, Index n);

/// Haar-distributed orthogonal n x n matrix.
Matrix orthogonal(Engine& rng, Index n);

/// Random k-dimensional subspace of R^n with a Gaussian (non-orthonormal) basis.
Subspace subspace(Engine& rng, Index n, Index k);

/// M Gaussian vectors in R^n as columns (spans R^n almost surely when M >= n).
Matrix frame(Engine& rng, Index n, Index m);

/// Uniform integer in [lo, hi].
Index uniform_index(Engine& rng, Index lo, Index hi);

}  // namespace obliq::random
