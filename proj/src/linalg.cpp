#include "obliq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace obliq {

void Tolerances::validate() const {
  for (double t : {rank, eq, eig, tight}) {
    if (!(std::isfinite(t) && t > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and positive");
    }
  }
}

Subspace::Subspace(Matrix basis, const Tolerances& tol) : basis_(std::move(basis)) {
  tol.validate();
  const auto n = basis_.rows();
  const auto k = basis_.cols();
  if (n < 1 || k < 1 || k > n) {
    throw Error(ErrorCode::DimensionMismatch,
                "subspace basis must be N x k with 1 <= k <= N, got " +
                    std::to_string(n) + " x " + std::to_string(k));
  }
  if (!all_finite(basis_)) {
    throw Error(ErrorCode::InvalidArgument, "subspace basis has non-finite entries");
  }
  if (numerical_rank(basis_, tol.rank) != static_cast<Index>(k)) {
    throw Error(ErrorCode::RankDeficient, "subspace basis columns are linearly dependent");
  }
}

Subspace Subspace::coordinate(Index ambient, const IndexSet& coords) {
  return Subspace(selection_matrix(ambient, coords));
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

bool is_symmetric(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.transpose()) <= tol;
}

Index numerical_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(rel_tol);
  return static_cast<Index>(qr.rank());
}

Matrix column_space(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(rel_tol);
  const auto r = qr.rank();
  Matrix q = qr.householderQ();
  return q.leftCols(r);
}

Matrix null_space(const Matrix& m, double rel_tol) {
  const auto cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::ColPivHouseholderQR<Matrix> qr(m.transpose());
  qr.setThreshold(rel_tol);
  const auto r = qr.rank();
  Matrix q = qr.householderQ();
  return q.rightCols(cols - r);
}

Subspace orthonormalize(const Subspace& s, const Tolerances& tol) {
  const Matrix& b = s.basis();
  const auto n = b.rows();
  const auto k = b.cols();
  Eigen::HouseholderQR<Matrix> qr(b);
  Matrix q = qr.householderQ() * Matrix::Identity(n, k);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return Subspace(std::move(q), tol);
}

Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(s.ambient());
  const auto k = static_cast<Eigen::Index>(s.dim());
  if (k == n) {
    throw Error(ErrorCode::FullSpace, "subspace is the whole space; complement is {0}");
  }
  const Subspace on = orthonormalize(s, tol);
  Eigen::HouseholderQR<Matrix> qr(on.basis());
  Matrix q = qr.householderQ();
  return Subspace(q.rightCols(n - k), tol);
}

Matrix orthogonal_projector_matrix(const Subspace& s, const Tolerances& tol) {
  const Matrix q = orthonormalize(s, tol).basis();
  Matrix p = q * q.transpose();
  return 0.5 * (p + p.transpose());
}

bool contains(const Subspace& s, const Matrix& vectors, const Tolerances& tol) {
  if (vectors.rows() != static_cast<Eigen::Index>(s.ambient())) return false;
  const Matrix q = orthonormalize(s, tol).basis();
  const Matrix residual = vectors - q * (q.transpose() * vectors);
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const double scale = std::max(1.0, vectors.col(j).norm());
    if (residual.col(j).norm() > tol.eq * scale) return false;
  }
  return true;
}

bool span_equal(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  return a.ambient() == b.ambient() && a.dim() == b.dim() &&
         contains(a, b.basis(), tol) && contains(b, a.basis(), tol);
}

EigenDecomposition symmetric_eigendecomposition(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "eigendecomposition needs a nonempty square matrix");
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  if (!is_symmetric(m, tol.eq * std::max(1.0, max_abs(m)))) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric within tolerance");
  }
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "symmetric eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix solve_linear(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_linear needs square A with rows(A) = rows(B)");
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(tol.rank);
  if (qr.rank() < a.rows()) {
    throw Error(ErrorCode::Singular, "coefficient matrix is singular at rank tolerance");
  }
  return qr.solve(b);
}

Matrix selection_matrix(Index ambient, const IndexSet& coords) {
  Matrix e = Matrix::Zero(static_cast<Eigen::Index>(ambient),
                          static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] >= ambient) {
      throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
    }
    e(static_cast<Eigen::Index>(coords[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return e;
}

IndexSet complement_indices(Index ambient, const IndexSet& coords) {
  std::vector<bool> used(ambient, false);
  for (Index c : coords) {
    if (c < ambient) used[c] = true;
  }
  IndexSet out;
  for (Index i = 0; i < ambient; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

}  // namespace obliq
