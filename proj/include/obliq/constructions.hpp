#pragma once

// Constructive results for oblique fusion frames: a Parseval fusion frame from
// any spanning set of vectors, diagonal-Gram projections (search and prescribed
// diagonal) and tight families of several projections onto one subspace.

#include <optional>

#include "obliq/fusion.hpp"

namespace obliq {

// ---------------------------------------------------------------------------
// Parseval fusion frame from a conventional frame

enum class ParsevalWeighting {
  /// v_i^2 = 1 / ((|J_{j_i}| + 1) r_i): the repeated pivot count of the
  /// coordinate times the single Gram entry r_i.
  CoordinateCount,
  /// v_i^2 = 1 / sum of r over all vectors sharing the pivot coordinate.
  PooledGram,
};

struct ParsevalConstruction {
  /// order[p] = original column index of the vector placed at position p. The
  /// first N positions hold a basis with nonzero diagonal x_{p,p}.
  IndexSet order;
  /// Reordered vectors, N x M.
  Matrix vectors;
  /// Pivot coordinate j_p (j_p = p for p < N).
  IndexSet pivots;
  /// |J_k| for each coordinate k: how many vectors past the first N pivot on k.
  std::vector<std::size_t> repeats;
  /// v_p^2.
  Vector weights_squared;
  /// y_p = e_{j_p} / x_{p, j_p}, as columns.
  Matrix duals;
  /// u_p = e_{j_p} / sqrt(|J_{j_p}| + 1), as columns; sum u u^T = I.
  Matrix parseval_vectors;
  FusionFrame frame;

  /// sum v_p^2 |x_p|^2 <f, y_p> y_p, which equals S f = f.
  Vector reconstruct(const Vector& f) const;

  /// sum v_p^2 <f, x_p> y_p, the expansion that reuses the raw frame
  /// coefficients <f, x_p>. Equals f only when the frame is a scaled copy of
  /// the standard basis; kept so callers can measure the discrepancy.
  Vector reconstruct_from_coefficients(const Vector& f) const;
};

/// Columns of `x` are the frame vectors. Throws ZeroVector, NotSpanning (rank
/// below N) or NoValidPermutation.
ParsevalConstruction parseval_from_frame(const Matrix& x,
                                         ParsevalWeighting weighting = ParsevalWeighting::CoordinateCount,
                                         const Tolerances& tol = {});

/// Row-to-column assignment maximizing the product of |m(row, col)|. Returns
/// col[row]. Square input.
IndexSet max_product_assignment(const Matrix& m);

// ---------------------------------------------------------------------------
// Diagonal Gram

struct DiagonalGram {
  IndexSet support;
  /// x_i, i in support, with x_i(j) = delta_ij on the support; pairwise orthogonal.
  Matrix forced;
  ObliqueProjection projection;
  /// Diagonal of P^T P (|x_i|^2 on the support, zero elsewhere).
  Vector diagonal;
};

inline constexpr Index kDefaultSearchLimit = 16;

/// Enumerates supports K of size k in lexicographic order and returns the
/// first whose forced vectors are orthogonal, or nullopt when none is. Throws
/// TooLarge when N exceeds `max_ambient`.
std::optional<DiagonalGram> diagonal_gram_search(const Subspace& w, const Tolerances& tol = {},
                                                 Index max_ambient = kDefaultSearchLimit);

struct DimensionRestriction {
  Index count;      // standard basis vectors contained in W
  long long bound;  // 2k - N
  bool holds;
};

/// Counts e_i in W and compares with 2k - N. `support` is the K returned by
/// diagonal_gram_search and must have k elements.
DimensionRestriction check_dimension_restriction(const Subspace& w, const IndexSet& support,
                                                 const Tolerances& tol = {});

/// A projection whose Gram is diagonal with the requested entries a_n >= 1 on
/// K (aligned with `support`). If 2|K| > N only N - |K| entries may exceed one;
/// `adjustable` names them (a subset of K of size N - |K|) and is chosen
/// automatically when absent. Throws BadEntry or InfeasibleEntries.
AlignedProjection prescribed_diagonal(Index ambient, const IndexSet& support,
                                      const std::vector<double>& entries,
                                      const std::optional<IndexSet>& adjustable = std::nullopt,
                                      const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Tight families of several projections onto one subspace

struct TightFamily {
  Subspace subspace;
  std::vector<ObliqueProjection> projections;
  /// Target lambda for sum P_i^T P_i = lambda I; absent if the spectrum is not flat.
  std::optional<double> constant;
  Vector achieved_spectrum;  // ascending eigenvalues of sum P_i^T P_i
  Matrix gram_sum;
  /// Null-space supports when every member projects along coordinate axes.
  std::vector<IndexSet> supports;

  FusionFrame frame() const { return FusionFrame::unweighted(projections); }
};

/// ceil(N / k): no family of projections onto a k-dimensional subspace with a
/// multiple of the identity as operator can have fewer members.
Index minimum_member_count(Index ambient, Index dim);

/// Orthogonal U with U from = to, rotating as little as possible inside both
/// subspaces and their complements (U = I when from = to).
Matrix alignment_unitary(const Subspace& from, const Subspace& to, const Tolerances& tol = {});

/// {U P U^T}: projections onto U W with the same Gram sum up to conjugation.
TightFamily transport(const TightFamily& family, const Matrix& unitary, const Tolerances& tol = {});

/// Two projections onto W with P1^T P1 + P2^T P2 = 2I. Requires 2k >= N
/// (DimensionTooSmall otherwise). Subspaces spanned by standard basis vectors
/// and equal-weight coordinate pairs are handled directly; all others by
/// transport from the canonical subspace.
TightFamily tight_pair(const Subspace& w, const Tolerances& tol = {});

/// L projections onto span{sum_j e_{jk+i}} in R^{kL} with sum L I.
TightFamily tight_chain(Index dim, Index count, const Tolerances& tol = {});

/// tight_chain transported onto W. Requires k L = N (BadFactorization).
TightFamily tight_chain_general(const Subspace& w, Index count, const Tolerances& tol = {});

struct ResidualChain {
  TightFamily family;
  /// L+1 on the first N-M coordinates and L on the last M: the spectrum the
  /// coordinate count predicts.
  Vector stated_pattern;
  /// Diagonal of the achieved Gram sum.
  Vector achieved_diagonal;
  bool matches_stated;
};

/// N = kL + M with 1 <= M < k: chains of length L+1 for the first M
/// coordinates, L for the rest, and L+1 axis-aligned projections onto their
/// span. Reports the spectrum actually reached. Throws BadFactorization.
ResidualChain residual_chain(Index dim, Index count, Index remainder, const Tolerances& tol = {});

}  // namespace obliq
