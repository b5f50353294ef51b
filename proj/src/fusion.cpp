#include "obliq/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace obliq {

FusionFrame::FusionFrame(std::vector<WeightedProjection> members) : ambient_(0), members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a fusion frame needs at least one member");
  }
  ambient_ = members_.front().projection.ambient();
  for (const auto& m : members_) {
    if (!(std::isfinite(m.weight) && m.weight > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "weights must be finite and positive");
    }
    if (m.projection.ambient() != ambient_) {
      throw Error(ErrorCode::DimensionMismatch, "members live in different ambient spaces");
    }
  }
}

FusionFrame FusionFrame::unweighted(const std::vector<ObliqueProjection>& projections) {
  std::vector<WeightedProjection> members;
  members.reserve(projections.size());
  for (const auto& p : projections) members.push_back({p, 1.0});
  return FusionFrame(std::move(members));
}

Matrix frame_operator(const FusionFrame& frame) {
  const auto n = static_cast<Eigen::Index>(frame.ambient());
  Matrix s = Matrix::Zero(n, n);
  for (const auto& m : frame.members()) {
    const Matrix& p = m.projection.matrix();
    s.noalias() += (m.weight * m.weight) * (p.transpose() * p);
  }
  return 0.5 * (s + s.transpose());
}

FrameBounds frame_bounds(const Matrix& op, const Tolerances& tol) {
  const auto eig = symmetric_eigendecomposition(op, tol);
  return {eig.values(0), eig.values(eig.values.size() - 1)};
}

double frame_energy(const FusionFrame& frame, const Vector& f) {
  if (f.size() != static_cast<Eigen::Index>(frame.ambient())) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  }
  double total = 0.0;
  for (const auto& m : frame.members()) {
    total += m.weight * m.weight * (m.projection.matrix() * f).squaredNorm();
  }
  return total;
}

std::vector<Vector> analysis(const FusionFrame& frame, const Vector& f) {
  if (f.size() != static_cast<Eigen::Index>(frame.ambient())) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  }
  std::vector<Vector> out;
  out.reserve(frame.size());
  for (const auto& m : frame.members()) out.emplace_back(m.weight * (m.projection.matrix() * f));
  return out;
}

Vector synthesis(const FusionFrame& frame, const std::vector<Vector>& parts) {
  if (parts.size() != frame.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one part per member is required");
  }
  const auto n = static_cast<Eigen::Index>(frame.ambient());
  Vector out = Vector::Zero(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "part length differs from ambient dimension");
    }
    const auto& m = frame.members()[i];
    out.noalias() += m.weight * (m.projection.matrix().transpose() * parts[i]);
  }
  return out;
}

Vector reconstruct(const FusionFrame& frame, const Vector& f, const Tolerances& tol) {
  const Matrix s = frame_operator(frame);
  const auto eig = symmetric_eigendecomposition(s, tol);
  if (eig.values(0) <= tol.eig) {
    throw Error(ErrorCode::NotAFrame, "fusion frame operator is singular");
  }
  const Vector sf = synthesis(frame, analysis(frame, f));
  const Vector coeff = (eig.vectors.transpose() * sf).cwiseQuotient(eig.values);
  return eig.vectors * coeff;
}

std::size_t count_nonzeros(const Matrix& m, double tol) {
  return static_cast<std::size_t>((m.array().abs() > tol).count());
}

std::vector<IndexSet> block_pattern(const Matrix& m, double tol) {
  const auto n = static_cast<Index>(m.rows());
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      if (std::abs(m(a, b)) > tol || std::abs(m(b, a)) > tol) {
        const Index ri = find(i);
        const Index rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::map<Index, IndexSet> groups;
  for (Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<IndexSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
  return out;
}

OperatorReport operator_report(const Matrix& op, const Tolerances& tol) {
  OperatorReport r;
  r.op = op;
  const auto bounds = frame_bounds(op, tol);
  r.lower = bounds.lower;
  r.upper = bounds.upper;
  r.is_frame = r.lower > tol.eig;
  r.is_tight = r.upper > tol.eig && (r.upper - r.lower) <= tol.tight * r.upper;
  if (r.is_tight) r.tight_constant = 0.5 * (r.lower + r.upper);
  Matrix off = op;
  off.diagonal().setZero();
  r.is_diagonal = max_abs(off) <= tol.eq;
  r.is_identity_multiple = r.is_tight && r.is_diagonal;
  r.nnz = count_nonzeros(op, tol.eq);
  r.block_pattern = block_pattern(op, tol.eq);
  return r;
}

OperatorReport structure_report(const FusionFrame& frame, const Tolerances& tol) {
  return operator_report(frame_operator(frame), tol);
}

ProjectionDiagnostics diagnose(const ObliqueProjection& p, const Tolerances& tol) {
  const Matrix g = gram(p).matrix;
  return {p.idempotency_residual(), count_nonzeros(g, tol.eq), g.diagonal()};
}

}  // namespace obliq
