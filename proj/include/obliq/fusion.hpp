#pragma once

// Weighted families {P_i, v_i} of projections and their fusion frame operator
// S = sum v_i^2 P_i^T P_i.

#include <vector>

#include "obliq/projections.hpp"

namespace obliq {

struct WeightedProjection {
  ObliqueProjection projection;
  double weight = 1.0;
};

class FusionFrame {
 public:
  /// Throws InvalidArgument for an empty list or a weight that is not finite
  /// and positive, DimensionMismatch if the ambient dimensions differ.
  explicit FusionFrame(std::vector<WeightedProjection> members);

  /// All weights one.
  static FusionFrame unweighted(const std::vector<ObliqueProjection>& projections);

  Index ambient() const noexcept { return ambient_; }
  const std::vector<WeightedProjection>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  Index ambient_;
  std::vector<WeightedProjection> members_;
};

struct FrameBounds {
  double lower;  // C = lambda_min(S)
  double upper;  // D = lambda_max(S)
};

struct OperatorReport {
  Matrix op;
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;
  bool is_tight = false;
  std::optional<double> tight_constant;
  bool is_diagonal = false;
  bool is_identity_multiple = false;
  std::size_t nnz = 0;
  /// Connected components of the graph i ~ j iff |S_ij| > tol.eq; each
  /// component ascending, components ordered by their smallest index.
  std::vector<IndexSet> block_pattern;
};

/// Per-member diagnostics reported alongside the operator.
struct ProjectionDiagnostics {
  double idempotency_residual;
  std::size_t gram_nnz;
  Vector gram_diagonal;
};

Matrix frame_operator(const FusionFrame& frame);

/// Extreme eigenvalues of a symmetric operator. Throws NotSymmetric.
FrameBounds frame_bounds(const Matrix& op, const Tolerances& tol = {});

/// sum v_i^2 |P_i f|^2, the middle term of the frame inequality.
double frame_energy(const FusionFrame& frame, const Vector& f);

/// {v_i P_i f}.
std::vector<Vector> analysis(const FusionFrame& frame, const Vector& f);

/// sum v_i P_i^T f_i.
Vector synthesis(const FusionFrame& frame, const std::vector<Vector>& parts);

/// S^-1 S f through the eigendecomposition of S. Throws NotAFrame when
/// lambda_min(S) <= tol.eig.
Vector reconstruct(const FusionFrame& frame, const Vector& f, const Tolerances& tol = {});

/// Spectral and sparsity summary of an operator; `structure_report` applies it
/// to frame_operator(frame).
OperatorReport operator_report(const Matrix& op, const Tolerances& tol = {});
OperatorReport structure_report(const FusionFrame& frame, const Tolerances& tol = {});

std::size_t count_nonzeros(const Matrix& m, double tol);
std::vector<IndexSet> block_pattern(const Matrix& m, double tol);

ProjectionDiagnostics diagnose(const ObliqueProjection& p, const Tolerances& tol = {});

}  // namespace obliq
