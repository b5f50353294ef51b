#pragma once

// Dense real linear algebra used throughout the library. Matrices are plain
// Eigen value types; Subspace adds the "linearly independent basis" contract.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "obliq/error.hpp"

namespace obliq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Numerical thresholds. `rank` is relative to the largest singular value,
/// `eq` is an entrywise equality threshold, `eig` an eigenvalue threshold and
/// `tight` the relative spectral gap (D-C)/D below which an operator counts as
/// a multiple of the identity.
struct Tolerances {
  double rank = 1e-10;
  double eq = 1e-9;
  double eig = 1e-9;
  double tight = 1e-8;

  /// Throws InvalidArgument unless every threshold is finite and positive.
  void validate() const;
};

/// A k-dimensional subspace of R^N given by N x k basis columns.
class Subspace {
 public:
  /// Validates shape (1 <= k <= N), finiteness and column independence at
  /// `tol.rank`. Throws RankDeficient when columns are dependent.
  explicit Subspace(Matrix basis, const Tolerances& tol = {});

  /// Span of the given standard basis vectors (0-based) in R^ambient.
  static Subspace coordinate(Index ambient, const IndexSet& coords);

  Index ambient() const noexcept { return static_cast<Index>(basis_.rows()); }
  Index dim() const noexcept { return static_cast<Index>(basis_.cols()); }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  Matrix basis_;
};

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

// Frobenius-free helpers used by every module.
double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);
bool is_symmetric(const Matrix& m, double tol);

/// Numerical rank via column-pivoted Householder QR, relative threshold.
Index numerical_rank(const Matrix& m, double rel_tol);

/// Orthonormal basis of the column space of `m` (may have zero columns).
Matrix column_space(const Matrix& m, double rel_tol);

/// Orthonormal basis of {x : m x = 0} (may have zero columns).
Matrix null_space(const Matrix& m, double rel_tol);

/// Orthonormal basis with the same span, columns ordered as the input and
/// oriented so that <q_j, s_j> > 0. Idempotent on orthonormal input.
Subspace orthonormalize(const Subspace& s, const Tolerances& tol = {});

/// Orthonormal basis of the orthogonal complement. Throws FullSpace if k = N.
Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol = {});

/// Orthogonal projector onto span(s), as a dense symmetric matrix.
Matrix orthogonal_projector_matrix(const Subspace& s, const Tolerances& tol = {});

/// True when every column of `vectors` lies in s within `tol.eq` (relative to
/// the column norm when it exceeds one).
bool contains(const Subspace& s, const Matrix& vectors, const Tolerances& tol = {});

/// Span equality of two subspaces of the same ambient space.
bool span_equal(const Subspace& a, const Subspace& b, const Tolerances& tol = {});

/// Eigenvalues ascending with orthonormal eigenvectors. Throws NotSymmetric.
EigenDecomposition symmetric_eigendecomposition(const Matrix& m,
                                                const Tolerances& tol = {});

/// Solves A X = B. Throws DimensionMismatch or Singular (rank test at
/// `tol.rank`).
Matrix solve_linear(const Matrix& a, const Matrix& b, const Tolerances& tol = {});

/// Matrix whose columns are the listed standard basis vectors of R^ambient.
Matrix selection_matrix(Index ambient, const IndexSet& coords);

/// {0..ambient-1} minus `coords`, ascending.
IndexSet complement_indices(Index ambient, const IndexSet& coords);

}  // namespace obliq
