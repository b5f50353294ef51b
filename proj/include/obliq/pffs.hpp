#pragma once

// Pseudoframes for subspaces: an analysis family x_n = w_n + z_n (w_n a frame
// of W, z_n in W^perp) paired with the dual frame of {w_n} realizes the oblique
// projection onto W along span{x_n}^perp as Y X^T.

#include <optional>

#include "obliq/projections.hpp"

namespace obliq {

/// Duals of the frame {w_n} of W (columns of `w`) inside W: the W-restricted
/// frame operator's inverse applied to each w_n. Throws NotAFrameOfW if some
/// w_n leaves W or they do not span it.
Matrix canonical_dual_in_subspace(const Subspace& w, const Matrix& frame, const Tolerances& tol = {});

class PffsSystem {
 public:
  const Subspace& subspace() const noexcept { return subspace_; }
  const Matrix& frame() const noexcept { return frame_; }          // w_n
  const Matrix& dual() const noexcept { return dual_; }            // w~_n = Y
  const Matrix& perturbation() const noexcept { return perturbation_; }  // z_n
  const Matrix& analysis() const noexcept { return analysis_; }    // x_n = X
  std::size_t size() const noexcept { return static_cast<std::size_t>(frame_.cols()); }

  /// True when span{x_n} has dimension dim(W), so the induced projection has
  /// null space exactly span{x_n}^perp.
  bool p_consistent() const noexcept { return p_consistent_; }

 private:
  friend PffsSystem build_pffs(const Subspace&, const Matrix&, const Matrix&, const Tolerances&);
  PffsSystem(Subspace w, Matrix frame, Matrix dual, Matrix z, Matrix x, bool consistent)
      : subspace_(std::move(w)), frame_(std::move(frame)), dual_(std::move(dual)),
        perturbation_(std::move(z)), analysis_(std::move(x)), p_consistent_(consistent) {}

  Subspace subspace_;
  Matrix frame_;
  Matrix dual_;
  Matrix perturbation_;
  Matrix analysis_;
  bool p_consistent_;
};

/// Throws PerturbationNotOrthogonal if some z_n is not in W^perp and
/// DegenerateDirection if span{x_n}^perp meets W.
PffsSystem build_pffs(const Subspace& w, const Matrix& frame, const Matrix& perturbation,
                      const Tolerances& tol = {});

/// The single-vector system that realizes the projection onto span{x} along
/// e_pivot^perp: w = x / |x|^2 with the perturbation that turns the analysis
/// vector into e_pivot / x_pivot.
PffsSystem rank_one_pffs(const Vector& x, Index pivot, const Tolerances& tol = {});

/// Y X^T, onto W along span{x_n}^perp.
ObliqueProjection pffs_projection(const PffsSystem& sys, const Tolerances& tol = {});

/// X Y^T Y X^T (the Gram of the induced projection).
Matrix fusion_operator_matrix(const PffsSystem& sys);

struct PffsValidation {
  /// max over an orthonormal basis q of W of |sum <q, pi x_n> pi x~_n - q|.
  double projected_frame_residual;
  /// max over q of |sum <q, pi x_n> (I - pi) x~_n|.
  double annihilation_residual;
  /// max over q of |sum <q, x_n> x~_n - q|.
  double expansion_residual;
  /// lambda_min of the frame operator of {pi_W x_n} restricted to W.
  double projected_lower_bound;
  bool projected_frame_ok;
  bool annihilation_ok;
  bool expansion_ok;
  bool ok() const { return projected_frame_ok && annihilation_ok && expansion_ok; }
};

/// Checks the characterization of a pseudoframe pair (x_n, x~_n) for W. The
/// synthesis family defaults to the system's dual; any N x n matrix may be
/// supplied instead. Reports, never throws on failure.
PffsValidation validate_pffs(const PffsSystem& sys, const std::optional<Matrix>& synthesis = std::nullopt,
                             double threshold = 1e-8, const Tolerances& tol = {});

struct MeasurementConsistency {
  bool in_subspace;
  /// <f, z_n> = <f, x_n> - <f, w_n>.
  Vector deviations;
  double max_deviation;
  /// in_subspace and every deviation below tol.eq.
  bool consistent;
};

MeasurementConsistency measurement_consistency(const PffsSystem& sys, const Vector& f,
                                               const Tolerances& tol = {});

}  // namespace obliq
