#include "obliq/pffs.hpp"

#include <algorithm>
#include <cmath>

namespace obliq {

Matrix canonical_dual_in_subspace(const Subspace& w, const Matrix& frame, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(w.ambient());
  if (frame.rows() != n || frame.cols() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "frame must be N x n with n >= 1");
  }
  if (!contains(w, frame, tol)) {
    throw Error(ErrorCode::NotAFrameOfW, "frame vectors leave the subspace");
  }
  const Matrix q = orthonormalize(w, tol).basis();
  const Matrix coords = q.transpose() * frame;  // k x n
  const Matrix s = coords * coords.transpose();
  const auto eig = symmetric_eigendecomposition(s, tol);
  if (eig.values(0) <= tol.eig * std::max(1.0, eig.values(eig.values.size() - 1))) {
    throw Error(ErrorCode::NotAFrameOfW, "frame vectors do not span the subspace");
  }
  return q * solve_linear(s, coords, tol);
}

PffsSystem build_pffs(const Subspace& w, const Matrix& frame, const Matrix& perturbation,
                      const Tolerances& tol) {
  if (perturbation.rows() != frame.rows() || perturbation.cols() != frame.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "one perturbation per frame vector");
  }
  Matrix dual = canonical_dual_in_subspace(w, frame, tol);
  const Matrix q = orthonormalize(w, tol).basis();
  const Matrix leak = q.transpose() * perturbation;
  for (Eigen::Index j = 0; j < perturbation.cols(); ++j) {
    if (leak.col(j).norm() > tol.eq * std::max(1.0, perturbation.col(j).norm())) {
      throw Error(ErrorCode::PerturbationNotOrthogonal, "perturbation has a component in W");
    }
  }
  Matrix x = frame + perturbation;
  // f in W with <f, x_n> = 0 for all n exists iff Q^T X loses rank.
  const Index k = w.dim();
  if (numerical_rank(q.transpose() * x, tol.rank) < k) {
    throw Error(ErrorCode::DegenerateDirection, "span{x_n}^perp intersects W");
  }
  const bool consistent = numerical_rank(x, tol.rank) == k;
  return PffsSystem(w, frame, std::move(dual), perturbation, std::move(x), consistent);
}

PffsSystem rank_one_pffs(const Vector& x, Index pivot, const Tolerances& tol) {
  const auto n = x.size();
  if (static_cast<Eigen::Index>(pivot) >= n || x(static_cast<Eigen::Index>(pivot)) == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "pivot coordinate must hold a nonzero entry");
  }
  const auto j = static_cast<Eigen::Index>(pivot);
  const double norm2 = x.squaredNorm();
  Vector z = -x / norm2;
  z(j) = (norm2 - x(j) * x(j)) / (x(j) * norm2);
  return build_pffs(Subspace(Matrix(x), tol), Matrix(x / norm2), Matrix(z), tol);
}

ObliqueProjection pffs_projection(const PffsSystem& sys, const Tolerances& tol) {
  Matrix p = sys.dual() * sys.analysis().transpose();
  Matrix z = null_space(p, tol.rank);
  std::optional<Subspace> null;
  if (z.cols() > 0) null.emplace(std::move(z), tol);
  return ObliqueProjection::from_parts(std::move(p), sys.subspace(), std::move(null), tol);
}

Matrix fusion_operator_matrix(const PffsSystem& sys) {
  const Matrix& x = sys.analysis();
  const Matrix& y = sys.dual();
  Matrix s = x * (y.transpose() * y) * x.transpose();
  return 0.5 * (s + s.transpose());
}

PffsValidation validate_pffs(const PffsSystem& sys, const std::optional<Matrix>& synthesis,
                             double threshold, const Tolerances& tol) {
  const Matrix& x = sys.analysis();
  const Matrix synth = synthesis ? *synthesis : sys.dual();
  if (synth.rows() != x.rows() || synth.cols() != x.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "synthesis family must match the analysis family");
  }
  const Matrix q = orthonormalize(sys.subspace(), tol).basis();
  const Matrix pi = q * q.transpose();
  const auto n = pi.rows();
  const Matrix px = pi * x;
  const Matrix pxs = pi * synth;
  const Matrix rest = (Matrix::Identity(n, n) - pi) * synth;

  PffsValidation v{};
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    const Vector f = q.col(c);
    const Vector proj_coeff = px.transpose() * f;
    const Vector raw_coeff = x.transpose() * f;
    v.projected_frame_residual = std::max(v.projected_frame_residual, (pxs * proj_coeff - f).norm());
    v.annihilation_residual = std::max(v.annihilation_residual, (rest * proj_coeff).norm());
    v.expansion_residual = std::max(v.expansion_residual, (synth * raw_coeff - f).norm());
  }
  const Matrix coords = q.transpose() * px;
  v.projected_lower_bound = symmetric_eigendecomposition(coords * coords.transpose(), tol).values(0);
  v.projected_frame_ok = v.projected_frame_residual <= threshold && v.projected_lower_bound > tol.eig;
  v.annihilation_ok = v.annihilation_residual <= threshold;
  v.expansion_ok = v.expansion_residual <= threshold;
  return v;
}

MeasurementConsistency measurement_consistency(const PffsSystem& sys, const Vector& f,
                                               const Tolerances& tol) {
  if (f.size() != sys.analysis().rows()) {
    throw Error(ErrorCode::DimensionMismatch, "signal length differs from ambient dimension");
  }
  MeasurementConsistency r;
  r.in_subspace = contains(sys.subspace(), Matrix(f), tol);
  r.deviations = sys.perturbation().transpose() * f;
  r.max_deviation = r.deviations.size() ? r.deviations.cwiseAbs().maxCoeff() : 0.0;
  r.consistent = r.in_subspace && r.max_deviation <= tol.eq * std::max(1.0, f.norm());
  return r;
}

}  // namespace obliq
