#include "obliq/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace obliq {

namespace {

Eigen::Index ix(Index i) { return static_cast<Eigen::Index>(i); }

Vector unit(Index n, Index i) {
  Vector e = Vector::Zero(ix(n));
  e(ix(i)) = 1.0;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parseval

IndexSet max_product_assignment(const Matrix& m) {
  // Hungarian method on cost -log|m|; zero entries get a cost no finite
  // assignment can reach.
  const auto n = static_cast<std::size_t>(m.rows());
  constexpr double kForbidden = 1e7;
  const double inf = std::numeric_limits<double>::infinity();
  auto cost = [&](std::size_t i, std::size_t j) {
    const double a = std::abs(m(ix(i), ix(j)));
    return a > 0.0 ? -std::log(a) : kForbidden;
  };
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  IndexSet col(n, 0);
  for (std::size_t j = 1; j <= n; ++j) col[p[j] - 1] = j - 1;
  return col;
}

ParsevalConstruction parseval_from_frame(const Matrix& x, ParsevalWeighting weighting,
                                         const Tolerances& tol) {
  const auto n = static_cast<Index>(x.rows());
  const auto m = static_cast<Index>(x.cols());
  if (n == 0 || !all_finite(x)) {
    throw Error(ErrorCode::InvalidArgument, "frame must be a nonempty finite N x M matrix");
  }
  const double largest = x.colwise().norm().maxCoeff();
  for (Index i = 0; i < m; ++i) {
    if (!(x.col(ix(i)).norm() > tol.rank * largest)) {
      throw Error(ErrorCode::ZeroVector, "frame vector " + std::to_string(i) + " is zero");
    }
  }
  if (m < n || numerical_rank(x, tol.rank) < n) {
    throw Error(ErrorCode::NotSpanning, "frame vectors do not span R^N");
  }

  // A basis among the columns, then a coordinate assignment with every
  // diagonal entry as large as possible in product.
  IndexSet basis;
  try {
    basis = select_pivot_rows(x.transpose(), tol);
  } catch (const Error&) {
    throw Error(ErrorCode::NotSpanning, "frame vectors do not span R^N");
  }
  std::sort(basis.begin(), basis.end());
  Matrix square(ix(n), ix(n));
  for (Index c = 0; c < n; ++c) square.col(ix(c)) = x.col(ix(basis[c]));
  const IndexSet assign = max_product_assignment(square);

  IndexSet order;
  std::vector<bool> in_basis(m, false);
  for (Index row = 0; row < n; ++row) {
    const Index original = basis[assign[row]];
    order.push_back(original);
    in_basis[original] = true;
    if (!(std::abs(x(ix(row), ix(original))) > tol.rank * largest)) {
      throw Error(ErrorCode::NoValidPermutation, "no ordering with a nonzero diagonal exists");
    }
  }
  for (Index i = 0; i < m; ++i) {
    if (!in_basis[i]) order.push_back(i);
  }
  Matrix vectors(ix(n), ix(m));
  for (Index p = 0; p < m; ++p) vectors.col(ix(p)) = x.col(ix(order[p]));

  IndexSet pivots;
  std::vector<std::size_t> repeats(n, 0);
  for (Index p = 0; p < m; ++p) {
    Index pivot = p;
    if (p >= n) {
      Eigen::Index arg = 0;
      const Vector mag = vectors.col(ix(p)).cwiseAbs();
      for (Eigen::Index r = 1; r < mag.size(); ++r) {
        if (mag(r) > mag(arg)) arg = r;  // first maximum wins ties
      }
      pivot = static_cast<Index>(arg);
      ++repeats[pivot];
    }
    pivots.push_back(pivot);
  }

  std::vector<double> gram_entry(m);
  std::vector<double> pooled(n, 0.0);
  std::vector<ObliqueProjection> projections;
  Matrix duals = Matrix::Zero(ix(n), ix(m));
  Matrix parseval = Matrix::Zero(ix(n), ix(m));
  for (Index p = 0; p < m; ++p) {
    const Index j = pivots[p];
    const double pivot_value = vectors(ix(j), ix(p));
    const Vector normalized = vectors.col(ix(p)) / pivot_value;
    gram_entry[p] = normalized.squaredNorm();
    pooled[j] += gram_entry[p];
    Matrix offset = normalized - unit(n, j);
    offset(ix(j), 0) = 0.0;
    projections.push_back(aligned_projection(n, {j}, offset, tol).projection);
    duals(ix(j), ix(p)) = 1.0 / pivot_value;
    parseval(ix(j), ix(p)) = 1.0 / std::sqrt(static_cast<double>(repeats[j] + 1));
  }
  Vector weights_squared(ix(m));
  std::vector<WeightedProjection> members;
  members.reserve(m);
  for (Index p = 0; p < m; ++p) {
    const Index j = pivots[p];
    const double w2 = weighting == ParsevalWeighting::CoordinateCount
                          ? 1.0 / (static_cast<double>(repeats[j] + 1) * gram_entry[p])
                          : 1.0 / pooled[j];
    weights_squared(ix(p)) = w2;
    members.push_back({std::move(projections[p]), std::sqrt(w2)});
  }
  return ParsevalConstruction{std::move(order),   std::move(vectors), std::move(pivots),
                              std::move(repeats), std::move(weights_squared), std::move(duals),
                              std::move(parseval), FusionFrame(std::move(members))};
}

Vector ParsevalConstruction::reconstruct(const Vector& f) const {
  Vector out = Vector::Zero(f.size());
  for (Eigen::Index p = 0; p < vectors.cols(); ++p) {
    out += weights_squared(p) * vectors.col(p).squaredNorm() * duals.col(p).dot(f) * duals.col(p);
  }
  return out;
}

Vector ParsevalConstruction::reconstruct_from_coefficients(const Vector& f) const {
  Vector out = Vector::Zero(f.size());
  for (Eigen::Index p = 0; p < vectors.cols(); ++p) {
    out += weights_squared(p) * vectors.col(p).dot(f) * duals.col(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagonal Gram

namespace {

bool next_combination(IndexSet& c, Index n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<DiagonalGram> diagonal_gram_search(const Subspace& w, const Tolerances& tol,
                                                 Index max_ambient) {
  const Index n = w.ambient();
  const Index k = w.dim();
  if (n > max_ambient) {
    throw Error(ErrorCode::TooLarge, "exhaustive support search refused for N = " + std::to_string(n));
  }
  const Matrix q = orthonormalize(w, tol).basis();
  IndexSet support(k);
  for (Index i = 0; i < k; ++i) support[i] = i;
  do {
    Matrix block(ix(k), ix(k));
    for (Index r = 0; r < k; ++r) block.row(ix(r)) = q.row(ix(support[r]));
    if (numerical_rank(block, tol.rank) < k) continue;
    const Matrix forced = q * solve_linear(block, Matrix::Identity(ix(k), ix(k)), tol);
    const Matrix inner = forced.transpose() * forced;
    bool orthogonal = true;
    for (Index a = 0; a < k && orthogonal; ++a) {
      for (Index b = a + 1; b < k; ++b) {
        const double scale = std::sqrt(inner(ix(a), ix(a)) * inner(ix(b), ix(b)));
        if (std::abs(inner(ix(a), ix(b))) > tol.eq * scale) {
          orthogonal = false;
          break;
        }
      }
    }
    if (!orthogonal) continue;
    Matrix offsets = forced - selection_matrix(n, support);
    for (Index i : support) offsets.row(ix(i)).setZero();
    auto aligned = aligned_projection(n, support, offsets, tol);
    ObliqueProjection p = ObliqueProjection::from_parts(aligned.projection.matrix(), w,
                                                        aligned.projection.nullspace(), tol);
    Vector diag = gram(p).matrix.diagonal();
    return DiagonalGram{support, forced, std::move(p), std::move(diag)};
  } while (next_combination(support, n));
  return std::nullopt;
}

DimensionRestriction check_dimension_restriction(const Subspace& w, const IndexSet& support,
                                                 const Tolerances& tol) {
  const Index n = w.ambient();
  const Index k = w.dim();
  if (support.size() != k) {
    throw Error(ErrorCode::DimensionMismatch, "support size must equal dim(W)");
  }
  Index count = 0;
  for (Index i = 0; i < n; ++i) {
    if (contains(w, unit(n, i), tol)) ++count;
  }
  const long long bound = 2 * static_cast<long long>(k) - static_cast<long long>(n);
  return {count, bound, static_cast<long long>(count) >= bound};
}

AlignedProjection prescribed_diagonal(Index ambient, const IndexSet& support,
                                      const std::vector<double>& entries,
                                      const std::optional<IndexSet>& adjustable,
                                      const Tolerances& tol) {
  const Index k = support.size();
  if (entries.size() != k || k == 0 || k > ambient) {
    throw Error(ErrorCode::DimensionMismatch, "one entry per support index, 1 <= |K| <= N");
  }
  for (double a : entries) {
    if (!std::isfinite(a) || a < 1.0 - tol.eq) {
      throw Error(ErrorCode::BadEntry, "diagonal entries must be >= 1, got " + std::to_string(a));
    }
  }
  const IndexSet free_axes = complement_indices(ambient, support);
  std::vector<std::size_t> raised;  // positions in `support` receiving an offset
  if (2 * k <= ambient) {
    for (std::size_t i = 0; i < k; ++i) raised.push_back(i);
  } else {
    const std::size_t slots = ambient - k;
    std::vector<bool> chosen(k, false);
    if (adjustable) {
      if (adjustable->size() != slots) {
        throw Error(ErrorCode::InfeasibleEntries,
                    "adjustable set must have N - |K| = " + std::to_string(slots) + " elements");
      }
      for (Index a : *adjustable) {
        const auto it = std::find(support.begin(), support.end(), a);
        if (it == support.end()) {
          throw Error(ErrorCode::InfeasibleEntries, "adjustable index outside the support");
        }
        chosen[static_cast<std::size_t>(it - support.begin())] = true;
      }
    } else {
      std::size_t used = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (entries[i] > 1.0 + tol.eq) {
          chosen[i] = true;
          ++used;
        }
      }
      for (std::size_t i = 0; i < k && used < slots; ++i) {
        if (!chosen[i]) {
          chosen[i] = true;
          ++used;
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (chosen[i]) {
        raised.push_back(i);
      } else if (entries[i] > 1.0 + tol.eq) {
        throw Error(ErrorCode::InfeasibleEntries,
                    "with 2|K| > N at most N - |K| entries may exceed one");
      }
    }
    if (raised.size() > slots) {
      throw Error(ErrorCode::InfeasibleEntries,
                  "with 2|K| > N at most N - |K| entries may exceed one");
    }
  }
  Matrix offsets = Matrix::Zero(ix(ambient), ix(k));
  for (std::size_t slot = 0; slot < raised.size(); ++slot) {
    const std::size_t i = raised[slot];
    offsets(ix(free_axes[slot]), ix(i)) = std::sqrt(std::max(0.0, entries[i] - 1.0));
  }
  return aligned_projection(ambient, support, offsets, tol);
}

// ---------------------------------------------------------------------------
// Tight families

namespace {

struct SignedChain {
  IndexSet coords;
  std::vector<double> signs;
};

Matrix chain_vector(Index n, const SignedChain& c) {
  Vector v = Vector::Zero(ix(n));
  for (std::size_t t = 0; t < c.coords.size(); ++t) v(ix(c.coords[t])) = c.signs[t];
  return v;
}

Subspace chain_span(Index n, const std::vector<SignedChain>& chains, const Tolerances& tol) {
  Matrix basis(ix(n), ix(chains.size()));
  for (std::size_t i = 0; i < chains.size(); ++i) basis.col(ix(i)) = chain_vector(n, chains[i]).normalized();
  return Subspace(std::move(basis), tol);
}

// Projection onto span(chains) along the axes outside `support`, where the
// support meets every chain exactly once. P e_c = s_c * chain(c), so the Gram
// is diagonal with the chain length at c.
ObliqueProjection chain_projection(Index n, const std::vector<SignedChain>& chains,
                                   const Subspace& w, const IndexSet& support,
                                   const Tolerances& tol) {
  Matrix offsets = Matrix::Zero(ix(n), ix(support.size()));
  for (std::size_t s = 0; s < support.size(); ++s) {
    const Index c = support[s];
    bool found = false;
    for (const auto& chain : chains) {
      const auto it = std::find(chain.coords.begin(), chain.coords.end(), c);
      if (it == chain.coords.end()) continue;
      const double sign = chain.signs[static_cast<std::size_t>(it - chain.coords.begin())];
      offsets.col(ix(s)) = sign * chain_vector(n, chain) - unit(n, c);
      found = true;
      break;
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "support coordinate outside every chain");
  }
  auto aligned = aligned_projection(n, support, offsets, tol);
  return ObliqueProjection::from_parts(aligned.projection.matrix(), w, aligned.projection.nullspace(), tol);
}

TightFamily finish(Subspace w, std::vector<ObliqueProjection> projections,
                   std::vector<IndexSet> supports, const Tolerances& tol) {
  const auto n = ix(w.ambient());
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& p : projections) sum += gram(p).matrix;
  const auto eig = symmetric_eigendecomposition(sum, tol);
  TightFamily f{std::move(w), std::move(projections), std::nullopt, eig.values, sum, std::move(supports)};
  const double lo = eig.values(0);
  const double hi = eig.values(eig.values.size() - 1);
  if (hi > tol.eig && hi - lo <= tol.tight * hi) f.constant = 0.5 * (lo + hi);
  return f;
}

TightFamily chain_family(Index n, const std::vector<SignedChain>& chains,
                         const std::vector<IndexSet>& supports, const Tolerances& tol) {
  Subspace w = chain_span(n, chains, tol);
  std::vector<ObliqueProjection> ps;
  std::vector<IndexSet> sorted;
  for (IndexSet s : supports) {
    std::sort(s.begin(), s.end());
    ps.push_back(chain_projection(n, chains, w, s, tol));
    sorted.push_back(std::move(s));
  }
  return finish(std::move(w), std::move(ps), std::move(sorted), tol);
}

// Recognizes W = span({e_i : i in E} U {e_a + s e_b : pairs}) with the pairs
// and E partitioning the coordinates. Returns the chains, or nullopt.
std::optional<std::vector<SignedChain>> pair_structure(const Subspace& w, const Tolerances& tol) {
  const Index n = w.ambient();
  const Matrix pi = orthogonal_projector_matrix(w, tol);
  const double eps = 1e3 * tol.eq;
  std::vector<SignedChain> chains;
  std::vector<bool> seen(n, false);
  for (Index i = 0; i < n; ++i) {
    if (seen[i]) continue;
    const double d = pi(ix(i), ix(i));
    if (std::abs(d - 1.0) <= eps) {
      chains.push_back({{i}, {1.0}});
      seen[i] = true;
      continue;
    }
    if (std::abs(d - 0.5) > eps) return std::nullopt;
    std::optional<Index> partner;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = std::abs(pi(ix(i), ix(j)));
      if (std::abs(v - 0.5) <= eps) {
        if (partner) return std::nullopt;
        partner = j;
      } else if (v > eps) {
        return std::nullopt;
      }
    }
    if (!partner || seen[*partner] || std::abs(pi(ix(*partner), ix(*partner)) - 0.5) > eps) {
      return std::nullopt;
    }
    const double sign = pi(ix(i), ix(*partner)) > 0.0 ? 1.0 : -1.0;
    chains.push_back({{i, *partner}, {1.0, sign}});
    seen[i] = seen[*partner] = true;
  }
  if (chains.size() != w.dim()) return std::nullopt;
  return chains;
}

// Two supports: singles plus the first (resp. second) coordinate of each pair.
std::vector<IndexSet> pair_supports(const std::vector<SignedChain>& chains) {
  IndexSet first, second;
  for (const auto& c : chains) {
    first.push_back(c.coords.front());
    second.push_back(c.coords.back());
  }
  return {first, second};
}

Matrix procrustes_basis(const Matrix& from, const Matrix& to) {
  // Rotate `to` (orthonormal columns) within its span to best match `from`.
  if (from.cols() == 0) return to;
  const Matrix m = to.transpose() * from;
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return to * (svd.matrixU() * svd.matrixV().transpose());
}

}  // namespace

Index minimum_member_count(Index ambient, Index dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return (ambient + dim - 1) / dim;
}

Matrix alignment_unitary(const Subspace& from, const Subspace& to, const Tolerances& tol) {
  if (from.ambient() != to.ambient() || from.dim() != to.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "alignment needs subspaces of equal dimension");
  }
  const auto n = ix(from.ambient());
  const auto k = ix(from.dim());
  const Matrix qf = orthonormalize(from, tol).basis();
  const Matrix qt = procrustes_basis(qf, orthonormalize(to, tol).basis());
  Matrix src(n, n), dst(n, n);
  src.leftCols(k) = qf;
  dst.leftCols(k) = qt;
  if (k < n) {
    const Matrix cf = orthogonal_complement(from, tol).basis();
    const Matrix ct = procrustes_basis(cf, orthogonal_complement(to, tol).basis());
    src.rightCols(n - k) = cf;
    dst.rightCols(n - k) = ct;
  }
  return dst * src.transpose();
}

TightFamily transport(const TightFamily& family, const Matrix& unitary, const Tolerances& tol) {
  const auto n = ix(family.subspace.ambient());
  if (unitary.rows() != n || unitary.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "unitary size differs from ambient dimension");
  }
  if (max_abs(unitary.transpose() * unitary - Matrix::Identity(n, n)) > tol.eq) {
    throw Error(ErrorCode::InvalidArgument, "transport matrix is not orthogonal");
  }
  Subspace w(unitary * family.subspace.basis(), tol);
  std::vector<ObliqueProjection> ps;
  for (const auto& p : family.projections) {
    std::optional<Subspace> null;
    if (p.nullspace()) null.emplace(unitary * p.nullspace()->basis(), tol);
    ps.push_back(ObliqueProjection::from_parts(unitary * p.matrix() * unitary.transpose(), w,
                                               std::move(null), tol));
  }
  return finish(std::move(w), std::move(ps), {}, tol);
}

TightFamily tight_pair(const Subspace& w, const Tolerances& tol) {
  const Index n = w.ambient();
  const Index k = w.dim();
  if (2 * k < n) {
    throw Error(ErrorCode::DimensionTooSmall, "two projections need dim(W) >= N/2");
  }
  if (auto chains = pair_structure(w, tol)) {
    auto family = chain_family(n, *chains, pair_supports(*chains), tol);
    // Keep the caller's subspace object; spans agree.
    std::vector<ObliqueProjection> ps;
    for (const auto& p : family.projections) {
      ps.push_back(ObliqueProjection::from_parts(p.matrix(), w, p.nullspace(), tol));
    }
    return finish(w, std::move(ps), family.supports, tol);
  }
  // Canonical W_c = span({e_i + e_{k+i}}_{i < N-k} U {e_i}_{N-k <= i < k}).
  std::vector<SignedChain> chains;
  for (Index i = 0; i < n - k; ++i) chains.push_back({{i, k + i}, {1.0, 1.0}});
  for (Index i = n - k; i < k; ++i) chains.push_back({{i}, {1.0}});
  const auto canonical = chain_family(n, chains, pair_supports(chains), tol);
  auto moved = transport(canonical, alignment_unitary(canonical.subspace, w, tol), tol);
  std::vector<ObliqueProjection> ps;
  for (const auto& p : moved.projections) {
    ps.push_back(ObliqueProjection::from_parts(p.matrix(), w, p.nullspace(), tol));
  }
  return finish(w, std::move(ps), {}, tol);
}

namespace {

std::vector<SignedChain> block_chains(Index dim, const std::vector<Index>& lengths) {
  std::vector<SignedChain> chains;
  for (Index i = 0; i < dim; ++i) {
    SignedChain c;
    for (Index j = 0; j < lengths[i]; ++j) {
      c.coords.push_back(j * dim + i);
      c.signs.push_back(1.0);
    }
    chains.push_back(std::move(c));
  }
  return chains;
}

IndexSet block(Index dim, Index j) {
  IndexSet b;
  for (Index i = 0; i < dim; ++i) b.push_back(j * dim + i);
  return b;
}

}  // namespace

TightFamily tight_chain(Index dim, Index count, const Tolerances& tol) {
  if (dim == 0 || count == 0) {
    throw Error(ErrorCode::BadFactorization, "need k >= 1 and L >= 1");
  }
  const Index n = dim * count;
  std::vector<IndexSet> supports;
  for (Index j = 0; j < count; ++j) supports.push_back(block(dim, j));
  return chain_family(n, block_chains(dim, std::vector<Index>(dim, count)), supports, tol);
}

TightFamily tight_chain_general(const Subspace& w, Index count, const Tolerances& tol) {
  if (count == 0 || w.dim() * count != w.ambient()) {
    throw Error(ErrorCode::BadFactorization, "need dim(W) * L = N");
  }
  const auto canonical = tight_chain(w.dim(), count, tol);
  auto moved = transport(canonical, alignment_unitary(canonical.subspace, w, tol), tol);
  std::vector<ObliqueProjection> ps;
  for (const auto& p : moved.projections) {
    ps.push_back(ObliqueProjection::from_parts(p.matrix(), w, p.nullspace(), tol));
  }
  return finish(w, std::move(ps), {}, tol);
}

ResidualChain residual_chain(Index dim, Index count, Index remainder, const Tolerances& tol) {
  if (count == 0 || remainder == 0 || remainder >= dim) {
    throw Error(ErrorCode::BadFactorization, "need L >= 1 and 1 <= M < k");
  }
  const Index n = dim * count + remainder;
  std::vector<Index> lengths(dim, count);
  for (Index i = 0; i < remainder; ++i) lengths[i] = count + 1;
  std::vector<IndexSet> supports;
  for (Index j = 0; j < count; ++j) supports.push_back(block(dim, j));
  // Last member: the trailing M coordinates of the long chains plus the
  // short chains' coordinates in block L.
  IndexSet last;
  for (Index i = remainder; i < dim; ++i) last.push_back((count - 1) * dim + i);
  for (Index i = 0; i < remainder; ++i) last.push_back(count * dim + i);
  supports.push_back(std::move(last));

  auto family = chain_family(n, block_chains(dim, lengths), supports, tol);
  Vector stated(ix(n));
  for (Index i = 0; i < n; ++i) {
    stated(ix(i)) = static_cast<double>(i < n - remainder ? count + 1 : count);
  }
  Vector diag = family.gram_sum.diagonal();
  const bool match = max_abs(diag - stated) <= tol.eq &&
                     max_abs(family.gram_sum - Matrix(diag.asDiagonal())) <= tol.eq;
  return {std::move(family), std::move(stated), std::move(diag), match};
}

}  // namespace obliq
