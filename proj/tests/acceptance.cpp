// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "obliq/constructions.hpp"
#include "obliq/pffs.hpp"
#include "obliq/random.hpp"
#include "oracles.hpp"

using namespace obliq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Matrix m(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) out(r, c++) = v;
    ++r;
  }
  return out;
}

Matrix identity(Index n) { return Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)); }

double tight_error(const TightFamily& f, double lambda) {
  Matrix sum = Matrix::Zero(f.gram_sum.rows(), f.gram_sum.cols());
  for (const auto& p : f.projections) sum += p.matrix().transpose() * p.matrix();
  return max_abs(sum - lambda * identity(f.subspace.ambient()));
}

// ---------------------------------------------------------------------------

Outcome two_plane_goldens() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Subspace floor(m({{1, 0}, {0, 1}, {0, 0}}));
  const Subspace slant(m({{-1, -1}, {1, 0}, {0, 1}}));
  const auto pi1 = orthogonal_projector(floor);
  const auto p1 = oblique(floor, Subspace(m({{0}, {1}, {1}})));
  const auto p2 = oblique(slant, Subspace::coordinate(3, {0}));
  const Matrix g2 = gram(p2).matrix;
  const Matrix s = frame_operator(FusionFrame::unweighted({pi1, p2}));
  const Matrix sd = frame_operator(FusionFrame::unweighted({p1, p2}));
  const double micros =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();

  const double e_p2 = max_abs(p2.matrix() - m({{0, -1, -1}, {0, 1, 0}, {0, 0, 1}}));
  const double e_g2 = max_abs(g2 - m({{0, 0, 0}, {0, 3, 1}, {0, 1, 2}}));
  const double e_s = max_abs(s - m({{1, 0, 0}, {0, 3, 1}, {0, 1, 2}}));
  const double e_sd = max_abs(sd - m({{1, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  o.require(e_p2 < 1e-12, "P2 err " + fmt(e_p2));
  o.require(e_g2 < 1e-12, "P2^T P2 err " + fmt(e_g2) + " (computed (1,1) entry " + fmt(g2(1, 1)) + ", expected 3)");
  o.require(e_s < 1e-12, "S err " + fmt(e_s));
  o.require(e_sd < 1e-12, "diagonal S err " + fmt(e_sd));
  o.require(micros < 1000.0, "runtime " + fmt(micros) + " us");
  if (o.pass) o.detail = "max err " + fmt(std::max({e_p2, e_g2, e_s, e_sd})) + ", " + fmt(micros) + " us";
  return o;
}

Outcome tight_pair_plane() {
  Outcome o;
  const double s = 1 / std::sqrt(2.0);
  const auto f = tight_pair(Subspace(m({{1, 0}, {0, s}, {0, s}})));
  const double err = tight_error(f, 2.0);
  o.require(f.projections.size() == 2, "member count");
  o.require(err < 1e-10, "err " + fmt(err));
  if (o.pass) o.detail = "err " + fmt(err);
  return o;
}

Outcome tight_pair_paired() {
  Outcome o;
  double worst = 0.0;
  for (Index half = 2; half <= 8; ++half) {
    Matrix b = Matrix::Zero(static_cast<Eigen::Index>(2 * half), static_cast<Eigen::Index>(half));
    for (Index i = 0; i < half; ++i) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
      b(static_cast<Eigen::Index>(half + i), static_cast<Eigen::Index>(i)) = 1.0;
    }
    const double err = tight_error(tight_pair(Subspace(b)), 2.0);
    worst = std::max(worst, err);
    o.require(err < 1e-10, "m=" + std::to_string(half) + " err " + fmt(err));
  }
  if (o.pass) o.detail = "max err " + fmt(worst);
  return o;
}

Outcome tight_chains() {
  Outcome o;
  random::Engine rng(2024);
  double canonical = 0.0, general = 0.0;
  for (auto [k, l] : {std::pair<Index, Index>{1, 5}, {2, 3}, {3, 3}, {4, 2}}) {
    const double err = tight_error(tight_chain(k, l), static_cast<double>(l));
    canonical = std::max(canonical, err);
    o.require(err < 1e-10, "chain (" + std::to_string(k) + "," + std::to_string(l) + ") err " + fmt(err));
    for (int trial = 0; trial < 50; ++trial) {
      const auto w = random::subspace(rng, k * l, k);
      const auto f = tight_chain_general(w, l);
      bool ranges = true;
      for (const auto& p : f.projections) ranges = ranges && span_equal(p.range(), w);
      const double e = tight_error(f, static_cast<double>(l));
      general = std::max(general, e);
      o.require(ranges, "transported member leaves W");
      o.require(e < 1e-8, "general (" + std::to_string(k) + "," + std::to_string(l) + ") err " + fmt(e));
    }
  }
  if (o.pass) o.detail = "canonical " + fmt(canonical) + ", transported " + fmt(general) + " over 200";
  return o;
}

Outcome parseval_frames() {
  Outcome o;
  random::Engine rng(4242);
  double op = 0.0, u = 0.0, raw = 0.0, exact = 0.0;
  int pattern_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = random::uniform_index(rng, 1, 12);
    const Index count = random::uniform_index(rng, n, 3 * n);
    const Matrix x = random::frame(rng, n, count);
    const auto c = parseval_from_frame(x);
    op = std::max(op, max_abs(frame_operator(c.frame) - identity(n)));
    u = std::max(u, max_abs(c.parseval_vectors * c.parseval_vectors.transpose() - identity(n)));
    for (std::size_t p = 0; p < c.frame.size(); ++p) {
      const Matrix& pm = c.frame.members()[p].projection.matrix();
      const Matrix g = pm.transpose() * pm;
      const auto j = static_cast<Eigen::Index>(c.pivots[p]);
      if (count_nonzeros(g, 1e-10) != 1 || std::abs(g(j, j)) <= 1e-10) ++pattern_failures;
    }
    for (int s = 0; s < 10; ++s) {
      const Vector f = random::gaussian(rng, n, 1);
      // sum v_i^2 <f, x_i> y_i, straight from the frame coefficients.
      Vector rec = Vector::Zero(f.size());
      for (Eigen::Index p = 0; p < c.vectors.cols(); ++p) {
        rec += c.weights_squared(p) * c.vectors.col(p).dot(f) * c.duals.col(p);
      }
      raw = std::max(raw, (rec - f).norm() / f.norm());
      exact = std::max(exact, (c.reconstruct(f) - f).norm() / f.norm());
    }
  }
  o.require(op < 1e-9, "S - I err " + fmt(op));
  o.require(raw < 1e-8, "sum v^2 <f,x> y relative err " + fmt(raw) + " (sum v^2 |x|^2 <f,y> y: " + fmt(exact) + ")");
  o.require(u < 1e-9, "sum u u^T - I err " + fmt(u));
  o.require(pattern_failures == 0, std::to_string(pattern_failures) + " grams without a single diagonal entry");
  if (o.pass) o.detail = "S err " + fmt(op) + ", reconstruction " + fmt(raw);
  return o;
}

Outcome sparsity_patterns() {
  Outcome o;
  random::Engine rng(777);
  double block = 0.0, tri = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = random::uniform_index(rng, 1, 12);
    const Index k = random::uniform_index(rng, 1, n);
    const auto w = random::subspace(rng, n, k);
    const auto c = block_sparse_projection(w);
    o.require(c.support.size() == k, "|K| != k");
    const Matrix g = gram(c.projection).matrix;
    std::vector<bool> in(n, false);
    for (Index i : c.support) in[i] = true;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (!(in[i] && in[j])) block = std::max(block, std::abs(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      }
    }
    const auto t = triangular_projection(w);
    const Matrix perm = t.permuted();
    for (Eigen::Index i = 0; i < perm.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < perm.cols(); ++j) tri = std::max(tri, std::abs(perm(i, j)));
    }
    o.require(span_equal(c.projection.range(), w) && span_equal(t.projection.range(), w), "range differs from W");
  }
  o.require(block < 1e-10, "gram outside KxK " + fmt(block));
  o.require(tri < 1e-10, "triangular upper part " + fmt(tri));
  if (o.pass) o.detail = "outside KxK " + fmt(block) + ", upper " + fmt(tri);
  return o;
}

Outcome diagonal_search() {
  Outcome o;
  random::Engine rng(31337);
  int feasible = 0, disagreements = 0, restriction_checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = random::uniform_index(rng, 1, 8);
    const Index k = random::uniform_index(rng, 1, n);
    Subspace w = random::subspace(rng, n, k);
    if (trial % 2 == 1) {
      IndexSet all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      IndexSet support(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(support.begin(), support.end());
      const IndexSet free = complement_indices(n, support);
      Matrix y = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
      const Index slots = std::min(k, static_cast<Index>(free.size()));
      if (slots > 0) {
        const Matrix q = random::orthogonal(rng, free.size());
        for (Index i = 0; i < slots; ++i) {
          const double len = 0.5 + static_cast<double>(random::uniform_index(rng, 0, 3));
          for (std::size_t f = 0; f < free.size(); ++f) {
            y(static_cast<Eigen::Index>(free[f]), static_cast<Eigen::Index>(i)) =
                len * q(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(i));
          }
        }
      }
      w = Subspace(aligned_projection(n, support, y).subspace.basis() * random::orthogonal(rng, k));
    }
    const bool expected = oracle::diagonal_gram_feasible(w.basis());
    const auto got = diagonal_gram_search(w);
    if (got.has_value() != expected) ++disagreements;
    if (got) {
      ++feasible;
      if (2 * k > n) {
        ++restriction_checks;
        const auto count = static_cast<long long>(oracle::basis_vectors_in_span(w.basis()));
        o.require(count >= 2 * static_cast<long long>(k) - static_cast<long long>(n),
                  "restriction violated at N=" + std::to_string(n) + ", k=" + std::to_string(k));
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements with enumeration");
  if (o.pass) {
    o.detail = std::to_string(feasible) + "/200 feasible, " + std::to_string(restriction_checks) + " restriction checks";
  }
  return o;
}

Outcome prescribed_diagonals() {
  Outcome o;
  random::Engine rng(99);
  std::uniform_real_distribution<double> extra(0.0, 10.0);
  double worst = 0.0;
  int rejected = 0, attempts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = random::uniform_index(rng, 1, 12);
    const Index k = random::uniform_index(rng, 1, n);
    IndexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    IndexSet support(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(support.begin(), support.end());
    const Index raised = 2 * k <= n ? k : n - k;
    std::vector<double> entries(k, 1.0);
    std::vector<Index> positions(k);
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    for (Index i = 0; i < raised; ++i) entries[positions[i]] = 1.0 + extra(rng);
    const auto p = prescribed_diagonal(n, support, entries);
    Vector expected = Vector::Zero(static_cast<Eigen::Index>(n));
    for (Index i = 0; i < k; ++i) expected(static_cast<Eigen::Index>(support[i])) = entries[i];
    worst = std::max(worst, max_abs(gram(p.projection).matrix - Matrix(expected.asDiagonal())));

    // One entry below one, and where 2k > N one raised entry too many.
    std::vector<double> low = entries;
    low[positions[0]] = 0.5 * random::uniform_index(rng, 0, 1);
    ++attempts;
    try {
      prescribed_diagonal(n, support, low);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadEntry) ++rejected;
    }
    if (2 * k > n) {
      std::vector<double> many = entries;
      many[positions[raised]] = 2.0;
      ++attempts;
      try {
        prescribed_diagonal(n, support, many);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InfeasibleEntries) ++rejected;
      }
    }
  }
  o.require(worst < 1e-10, "entry err " + fmt(worst));
  o.require(rejected == attempts, std::to_string(attempts - rejected) + " invalid requests accepted");
  if (o.pass) o.detail = "err " + fmt(worst) + ", " + std::to_string(rejected) + " rejections";
  return o;
}

Outcome pffs_systems() {
  Outcome o;
  random::Engine rng(161803);
  double proj = 0.0, fusion = 0.0, meas = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = random::uniform_index(rng, 2, 10);
    const Index k = random::uniform_index(rng, 1, n - 1);
    const Index count = random::uniform_index(rng, k, 2 * k + 2);
    const auto w = random::subspace(rng, n, k);
    const Matrix q = orthonormalize(w).basis();
    const Matrix c = orthogonal_complement(w).basis();
    const Matrix frame = q * random::gaussian(rng, k, count);
    const Matrix z = c * random::gaussian(rng, n - k, k) * q.transpose() * frame;
    const auto sys = build_pffs(w, frame, z);
    o.require(sys.p_consistent(), "inconsistent system");
    const auto p = pffs_projection(sys);
    const auto ref = oblique(w, Subspace(oracle::perp_basis(sys.analysis())));
    proj = std::max(proj, max_abs(sys.dual() * sys.analysis().transpose() - ref.matrix()));
    fusion = std::max(fusion, max_abs(fusion_operator_matrix(sys) - gram(p).matrix));
    const Vector f = w.basis() * random::gaussian(rng, k, 1);
    meas = std::max(meas, max_abs(sys.analysis().transpose() * f - sys.frame().transpose() * f));
  }
  o.require(proj < 1e-8, "Y X^T err " + fmt(proj));
  o.require(fusion < 1e-9, "X Y^T Y X^T err " + fmt(fusion));
  o.require(meas < 1e-10, "measurement err " + fmt(meas));
  if (o.pass) o.detail = "proj " + fmt(proj) + ", fusion " + fmt(fusion) + ", measurement " + fmt(meas);
  return o;
}

Outcome residual_chains() {
  Outcome o;
  const auto small = residual_chain(2, 1, 1);
  const double err = tight_error(small.family, 2.0);
  o.require(err < 1e-10, "(2,1,1) err " + fmt(err));
  std::ostringstream spectra;
  for (auto [k, l, rem] : {std::tuple<Index, Index, Index>{2, 2, 1}, {3, 2, 2}, {4, 3, 1}}) {
    const auto a = residual_chain(k, l, rem);
    const auto b = residual_chain(k, l, rem);
    const Index n = k * l + rem;
    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < (i < rem ? l + 1 : l); ++j) w(static_cast<Eigen::Index>(j * k + i), static_cast<Eigen::Index>(i)) = 1.0;
    }
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    bool members_ok = a.family.supports.size() == a.family.projections.size();
    for (std::size_t i = 0; i < a.family.projections.size() && members_ok; ++i) {
      const auto& p = a.family.projections[i];
      members_ok = p.idempotency_residual() < 1e-9 && oracle::span_distance(p.matrix(), w) < 1e-9;
      const auto ref = oracle::coordinate_projection(w, a.family.supports[i]);
      members_ok = members_ok && ref && max_abs(p.matrix() - *ref) < 1e-10;
      if (ref) sum += ref->transpose() * *ref;
    }
    const Vector brute = oracle::singular_values(sum).reverse();
    const std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(rem) + ")";
    o.require(members_ok, tag + " member is not a projection onto W");
    o.require(max_abs(a.family.achieved_spectrum - b.family.achieved_spectrum) == 0.0, tag + " nondeterministic");
    o.require(max_abs(a.family.achieved_spectrum - brute) < 1e-10, tag + " spectrum differs from recomputation");
    spectra << ' ' << tag << (a.matches_stated ? " stated" : " differs");
  }
  if (o.pass) o.detail = "(2,1,1) err " + fmt(err) + ";" + spectra.str();
  return o;
}

Outcome frame_inequality() {
  Outcome o;
  random::Engine rng(2718);
  std::uniform_real_distribution<double> weight(0.2, 3.0);
  double slack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = random::uniform_index(rng, 1, 10);
    std::vector<WeightedProjection> members;
    const Index count = random::uniform_index(rng, 1, 6);
    for (Index i = 0; i < count; ++i) {
      const Index k = random::uniform_index(rng, 1, n);
      const auto w = random::subspace(rng, n, k);
      members.push_back({k == n ? oblique(w, std::optional<Subspace>{}) : oblique(w, random::subspace(rng, n, n - k)),
                         weight(rng)});
    }
    const FusionFrame frame(std::move(members));
    const auto b = frame_bounds(frame_operator(frame));
    for (int s = 0; s < 100; ++s) {
      const Vector f = random::gaussian(rng, n, 1);
      const double e = frame_energy(frame, f);
      const double nf = f.squaredNorm();
      slack = std::min({slack, e - b.lower * nf, b.upper * nf - e});
    }
  }
  o.require(slack >= -1e-9, "min slack " + fmt(slack));
  if (o.pass) o.detail = "min slack " + fmt(slack);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"two-plane golden matrices", two_plane_goldens},
      {"tight pair on a plane in R^3", tight_pair_plane},
      {"tight pair on paired coordinates, m = 2..8", tight_pair_paired},
      {"tight chains, canonical and transported", tight_chains},
      {"Parseval fusion frames from random frames", parseval_frames},
      {"block-sparse and triangular patterns", sparsity_patterns},
      {"diagonal Gram search against enumeration", diagonal_search},
      {"prescribed diagonal entries", prescribed_diagonals},
      {"pseudoframe systems", pffs_systems},
      {"residual chains", residual_chains},
      {"sampled frame inequality", frame_inequality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %-45s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
