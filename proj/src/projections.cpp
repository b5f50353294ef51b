#include "obliq/projections.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace obliq {

namespace {

// Entrywise threshold for identities involving P, scaled by its magnitude.
double projection_threshold(const Matrix& p, const Tolerances& tol) {
  return tol.eq * std::max(1.0, max_abs(p));
}

void require_square(const Matrix& p) {
  if (p.rows() != p.cols() || p.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "projection matrix must be square and nonempty");
  }
}

}  // namespace

ObliqueProjection ObliqueProjection::from_parts(Matrix matrix, Subspace range,
                                                std::optional<Subspace> nullspace,
                                                const Tolerances& tol) {
  require_square(matrix);
  const auto n = static_cast<Index>(matrix.rows());
  if (range.ambient() != n || (nullspace && nullspace->ambient() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "range/null space ambient dimension differs from matrix");
  }
  const Index null_dim = nullspace ? nullspace->dim() : 0;
  if (range.dim() + null_dim != n) {
    throw Error(ErrorCode::DimensionMismatch, "dim(range) + dim(null space) must equal N");
  }
  if (!all_finite(matrix)) {
    throw Error(ErrorCode::NotAProjection, "matrix has non-finite entries");
  }
  const double thr = projection_threshold(matrix, tol);
  const double idem = max_abs(matrix * matrix - matrix);
  if (idem > thr) {
    throw Error(ErrorCode::NotAProjection,
                "matrix is not idempotent (residual " + std::to_string(idem) + ")");
  }
  const Matrix& w = range.basis();
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    if ((matrix * w.col(j) - w.col(j)).lpNorm<Eigen::Infinity>() > thr * std::max(1.0, w.col(j).norm())) {
      throw Error(ErrorCode::NotAProjection, "matrix does not fix its range");
    }
  }
  if (nullspace) {
    const Matrix& v = nullspace->basis();
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      if ((matrix * v.col(j)).lpNorm<Eigen::Infinity>() > thr * std::max(1.0, v.col(j).norm())) {
        throw Error(ErrorCode::NotAProjection, "matrix does not annihilate its null space");
      }
    }
  }
  return ObliqueProjection(std::move(matrix), std::move(range), std::move(nullspace));
}

ObliqueProjection ObliqueProjection::from_matrix(Matrix matrix, const Tolerances& tol) {
  require_square(matrix);
  if (!all_finite(matrix)) {
    throw Error(ErrorCode::NotAProjection, "matrix has non-finite entries");
  }
  const double idem = max_abs(matrix * matrix - matrix);
  if (idem > projection_threshold(matrix, tol)) {
    throw Error(ErrorCode::NotAProjection,
                "matrix is not idempotent (residual " + std::to_string(idem) + ")");
  }
  Matrix r = column_space(matrix, tol.rank);
  if (r.cols() == 0) {
    throw Error(ErrorCode::NotAProjection, "zero matrix projects onto {0}");
  }
  Matrix z = null_space(matrix, tol.rank);
  std::optional<Subspace> null;
  if (z.cols() > 0) null.emplace(std::move(z), tol);
  return from_parts(std::move(matrix), Subspace(std::move(r), tol), std::move(null), tol);
}

double ObliqueProjection::idempotency_residual() const {
  return max_abs(matrix_ * matrix_ - matrix_);
}

ObliqueProjection oblique(const Subspace& range, const Subspace& nullspace,
                          const Tolerances& tol) {
  const Index n = range.ambient();
  if (nullspace.ambient() != n || range.dim() + nullspace.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "range and null space dimensions must add to N");
  }
  const auto k = static_cast<Eigen::Index>(range.dim());
  Matrix stacked(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  stacked << range.basis(), nullspace.basis();
  if (numerical_rank(stacked, tol.rank) < n) {
    throw Error(ErrorCode::NotComplementary, "range and null space intersect nontrivially");
  }
  // P = B diag(I_k, 0) B^-1 with B = [W | V]: keep the W-coordinates of x.
  const Matrix coords = solve_linear(stacked, Matrix::Identity(stacked.rows(), stacked.cols()), tol);
  Matrix p = range.basis() * coords.topRows(k);
  return ObliqueProjection::from_parts(std::move(p), range, nullspace, tol);
}

ObliqueProjection oblique(const Subspace& range, const std::optional<Subspace>& nullspace,
                          const Tolerances& tol) {
  if (nullspace) return oblique(range, *nullspace, tol);
  if (range.dim() != range.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "a null space is required unless the range is R^N");
  }
  const auto n = static_cast<Eigen::Index>(range.ambient());
  return ObliqueProjection::from_parts(Matrix::Identity(n, n), range, std::nullopt, tol);
}

ObliqueProjection orthogonal_projector(const Subspace& w, const Tolerances& tol) {
  std::optional<Subspace> perp;
  if (w.dim() < w.ambient()) perp = orthogonal_complement(w, tol);
  return ObliqueProjection::from_parts(orthogonal_projector_matrix(w, tol), w, std::move(perp), tol);
}

GramMatrix gram(const ObliqueProjection& p) {
  Matrix g = p.matrix().transpose() * p.matrix();
  g = 0.5 * (g + g.transpose());
  return {std::move(g), p};
}

IndexSet select_pivot_rows(const Matrix& m, const Tolerances& tol) {
  const auto rows = m.rows();
  const auto k = m.cols();
  Matrix work = m;
  std::vector<bool> taken(static_cast<std::size_t>(rows), false);
  IndexSet picked;
  const double scale = std::max(max_abs(m), 1e-300);
  for (Eigen::Index step = 0; step < k; ++step) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double nrm = work.row(i).norm();
      // Relative slack so that rounding noise never beats a lower index.
      if (best < 0 || nrm > best_norm * (1.0 + 1e-12) + 1e-300) {
        best = i;
        best_norm = nrm;
      }
    }
    if (best < 0 || best_norm <= tol.rank * scale) {
      throw Error(ErrorCode::RankDeficient, "matrix rows do not contain k independent pivots");
    }
    taken[static_cast<std::size_t>(best)] = true;
    picked.push_back(static_cast<Index>(best));
    const Eigen::RowVectorXd dir = work.row(best) / best_norm;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!taken[static_cast<std::size_t>(i)]) work.row(i) -= work.row(i).dot(dir) * dir;
    }
    work.row(best).setZero();
  }
  return picked;
}

namespace {

Matrix rows_of(const Matrix& m, const IndexSet& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

// Projection with null space span{e_j : j not in K}; `columns` holds P e_i for
// i in K, in the order of K.
ObliqueProjection coordinate_projection(const Subspace& w, const IndexSet& support,
                                        const Matrix& columns, const Tolerances& tol) {
  const Index n = w.ambient();
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < support.size(); ++i) {
    p.col(static_cast<Eigen::Index>(support[i])) = columns.col(static_cast<Eigen::Index>(i));
  }
  const IndexSet rest = complement_indices(n, support);
  std::optional<Subspace> null;
  if (!rest.empty()) null.emplace(selection_matrix(n, rest), tol);
  return ObliqueProjection::from_parts(std::move(p), w, std::move(null), tol);
}

}  // namespace

CoordinateProjection block_sparse_projection(const Subspace& w, const Tolerances& tol) {
  const Matrix q = orthonormalize(w, tol).basis();
  IndexSet support = select_pivot_rows(q, tol);
  std::sort(support.begin(), support.end());
  // (pi_K restricted to W)^-1 pi_K: column i of P is the W-vector whose K-part is e_i.
  const Matrix block = rows_of(q, support);
  const Matrix cols = q * solve_linear(block, Matrix::Identity(block.rows(), block.cols()), tol);
  auto p = coordinate_projection(w, support, cols, tol);
  return {std::move(support), std::move(p)};
}

Matrix TriangularProjection::permuted() const {
  const Matrix& p = projection.matrix();
  Matrix out(p.rows(), p.cols());
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          p(static_cast<Eigen::Index>(order[a]), static_cast<Eigen::Index>(order[b]));
    }
  }
  return out;
}

TriangularProjection triangular_projection(const Subspace& w, const Tolerances& tol) {
  const Matrix q = orthonormalize(w, tol).basis();
  const auto k = q.cols();
  IndexSet support = select_pivot_rows(q, tol);
  std::sort(support.begin(), support.end());
  const Matrix block = rows_of(q, support);  // pi_K restricted to W, in Q-coordinates

  // x_j = Q c_j with pi_K x_j confined to the first j+1 support coordinates and
  // orthogonal to x_0..x_{j-1}; together k-1 linear conditions on c_j.
  Matrix coeffs(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Matrix constraints(k - 1, k);
    Eigen::Index row = 0;
    for (Eigen::Index m = j + 1; m < k; ++m) constraints.row(row++) = block.row(m);
    for (Eigen::Index prev = 0; prev < j; ++prev) constraints.row(row++) = coeffs.col(prev).transpose();
    Vector c = constraints.rows() == 0 ? Vector(Vector::Ones(1))
                                       : Vector(null_space(constraints, tol.rank).col(0));
    c.normalize();
    if (block.row(j).dot(c) < 0.0) c = -c;
    coeffs.col(j) = c;
  }
  Matrix basis = q * coeffs;
  // P = U pi_K with U(pi_K x_j) = x_j.
  const Matrix images = block * coeffs;  // upper triangular
  const Matrix cols = basis * solve_linear(images, Matrix::Identity(k, k), tol);
  auto p = coordinate_projection(w, support, cols, tol);

  IndexSet order = support;
  const IndexSet rest = complement_indices(w.ambient(), support);
  order.insert(order.end(), rest.begin(), rest.end());
  return {std::move(order), std::move(support), std::move(basis), std::move(p)};
}

AlignedProjection aligned_projection(Index ambient, const IndexSet& support,
                                     const Matrix& offsets, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(ambient);
  const auto k = static_cast<Eigen::Index>(support.size());
  if (k < 1 || static_cast<Index>(k) > ambient || offsets.rows() != n || offsets.cols() != k) {
    throw Error(ErrorCode::DimensionMismatch, "offsets must be N x |K| with 1 <= |K| <= N");
  }
  std::vector<bool> in_support(ambient, false);
  for (Index i : support) {
    if (i >= ambient || in_support[i]) {
      throw Error(ErrorCode::InvalidArgument, "support indices must be distinct and < N");
    }
    in_support[i] = true;
  }
  Matrix y = offsets;
  for (Index i : support) {
    const auto r = static_cast<Eigen::Index>(i);
    if (y.row(r).lpNorm<Eigen::Infinity>() > tol.eq) {
      throw Error(ErrorCode::SupportViolation, "offset vector has mass on the support");
    }
    y.row(r).setZero();
  }
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a + 1; b < k; ++b) {
      const double scale = std::max(1.0, y.col(a).norm() * y.col(b).norm());
      if (std::abs(y.col(a).dot(y.col(b))) > tol.eq * scale) {
        throw Error(ErrorCode::NotOrthogonal, "offset vectors are not pairwise orthogonal");
      }
    }
  }
  Matrix cols = y + selection_matrix(ambient, support);
  Matrix basis = cols;
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j).normalize();
  Subspace w(std::move(basis), tol);
  auto p = coordinate_projection(w, support, cols, tol);
  return {support, std::move(w), std::move(p)};
}

EigenStructure eigen_structure(const ObliqueProjection& p, const Tolerances& tol) {
  Subspace ones(column_space(p.matrix(), tol.rank), tol);
  Matrix z = null_space(p.matrix(), tol.rank);
  std::optional<Subspace> zeros;
  if (z.cols() > 0) zeros.emplace(std::move(z), tol);
  return {std::move(ones), std::move(zeros)};
}

}  // namespace obliq
