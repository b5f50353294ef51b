#pragma once

// Oblique (idempotent, not necessarily symmetric) projections and the
// structured constructions built from a choice of coordinate support K.
// Indices are 0-based throughout.

#include <optional>

#include "obliq/linalg.hpp"

namespace obliq {

/// An idempotent N x N matrix together with its range W and null space N(P),
/// so that W (+) N(P) = R^N. The null space is absent when P = I.
class ObliqueProjection {
 public:
  /// Checks every invariant (idempotency, P w = w on the range basis, P v = 0
  /// on the null-space basis, dimension count). Throws NotAProjection.
  static ObliqueProjection from_parts(Matrix matrix, Subspace range,
                                      std::optional<Subspace> nullspace,
                                      const Tolerances& tol = {});

  /// Derives range and null space from an explicit matrix. Throws
  /// NotAProjection if the matrix is not idempotent or is zero.
  static ObliqueProjection from_matrix(Matrix matrix, const Tolerances& tol = {});

  const Matrix& matrix() const noexcept { return matrix_; }
  const Subspace& range() const noexcept { return range_; }
  const std::optional<Subspace>& nullspace() const noexcept { return nullspace_; }
  Index ambient() const noexcept { return range_.ambient(); }
  Index rank() const noexcept { return range_.dim(); }

  /// max |P^2 - P|.
  double idempotency_residual() const;

 private:
  ObliqueProjection(Matrix m, Subspace r, std::optional<Subspace> n)
      : matrix_(std::move(m)), range_(std::move(r)), nullspace_(std::move(n)) {}

  Matrix matrix_;
  Subspace range_;
  std::optional<Subspace> nullspace_;
};

/// P^T P for a projection P.
struct GramMatrix {
  Matrix matrix;
  ObliqueProjection source;
};

/// Projection onto `range` along `nullspace`. Throws DimensionMismatch when the
/// dimensions do not add up to N and NotComplementary when the stacked basis is
/// rank deficient.
ObliqueProjection oblique(const Subspace& range, const Subspace& nullspace,
                          const Tolerances& tol = {});

/// Same, allowing an absent null space when range is the whole space.
ObliqueProjection oblique(const Subspace& range, const std::optional<Subspace>& nullspace,
                          const Tolerances& tol = {});

/// The orthogonal projector pi_W (symmetric, null space W^perp).
ObliqueProjection orthogonal_projector(const Subspace& w, const Tolerances& tol = {});

GramMatrix gram(const ObliqueProjection& p);

/// Greedy row selection on an N x k matrix of full column rank: repeatedly
/// takes the row of largest residual norm (ties to the lowest index) and
/// deflates the rest against it. Returns k row indices in selection order.
IndexSet select_pivot_rows(const Matrix& m, const Tolerances& tol = {});

/// A projection whose null space is span{e_j : j not in support}.
struct CoordinateProjection {
  IndexSet support;  // ascending
  ObliqueProjection projection;
};

/// Projection onto W with P e_j = 0 for j outside a k-element support K, so
/// that P^T P vanishes outside K x K. K comes from pivoted row selection on an
/// orthonormal basis of W.
CoordinateProjection block_sparse_projection(const Subspace& w, const Tolerances& tol = {});

struct TriangularProjection {
  /// Coordinate ordering: the support K ascending, then the rest ascending.
  IndexSet order;
  IndexSet support;
  /// Orthonormal basis x_1..x_k of W with pi_K x_j in span{e_{K[0..j]}}.
  Matrix triangular_basis;
  ObliqueProjection projection;

  /// The projection matrix with rows and columns reordered by `order`; this
  /// is lower triangular.
  Matrix permuted() const;
};

/// Projection onto W that is triangular after the coordinate permutation
/// that places K first. Built from the nested orthonormal basis of W.
TriangularProjection triangular_projection(const Subspace& w, const Tolerances& tol = {});

/// P e_i = e_i + y_i for i in K and P e_j = 0 otherwise, with the y_i pairwise
/// orthogonal and supported off K. P^T P is diagonal with 1 + |y_i|^2 on K.
struct AlignedProjection {
  IndexSet support;
  Subspace subspace;
  ObliqueProjection projection;
};

/// `offsets` is N x |K|; column i is y for support[i]. Throws SupportViolation
/// if some y has mass on K and NotOrthogonal if the y are not orthogonal.
AlignedProjection aligned_projection(Index ambient, const IndexSet& support,
                                     const Matrix& offsets, const Tolerances& tol = {});

/// Eigenvalue-1 and eigenvalue-0 eigenspaces of a projection, recovered from
/// its matrix. They are its range and null space and jointly span R^N.
struct EigenStructure {
  Subspace ones;
  std::optional<Subspace> zeros;
};

EigenStructure eigen_structure(const ObliqueProjection& p, const Tolerances& tol = {});

}  // namespace obliq
