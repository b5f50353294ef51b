#include "obliq/random.hpp"

namespace obliq::random {

Matrix gaussian(Engine& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = normal(rng);
  }
  return m;
}

Vector unit_vector(Engine& rng, Index n) {
  Vector v = gaussian(rng, n, 1).col(0);
  return v / v.norm();
}

Matrix orthogonal(Engine& rng, Index n) {
  const Matrix g = gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Sign fix on R's diagonal makes the distribution Haar.
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Subspace subspace(Engine& rng, Index n, Index k) {
  return Subspace(gaussian(rng, n, k));
}

Matrix frame(Engine& rng, Index n, Index m) { return gaussian(rng, n, m); }

Index uniform_index(Engine& rng, Index lo, Index hi) {
  std::uniform_int_distribution<Index> dist(lo, hi);
  return dist(rng);
}

}  // namespace obliq::random
