#include "doctest.h"
#include "obliq/linalg.hpp"
#include "obliq/random.hpp"
#include "oracles.hpp"

using namespace obliq;

namespace {

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

}  // namespace

TEST_CASE("subspace validation") {
  CHECK_THROWS_AS(Subspace(Matrix(3, 0)), Error);
  CHECK_THROWS_AS(Subspace(Matrix::Ones(2, 3)), Error);
  try {
    Subspace s(m({{1, 2}, {2, 4}, {0, 0}}));
    FAIL("dependent columns accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(Subspace{bad}, Error);

  const auto c = Subspace::coordinate(4, {1, 3});
  CHECK(c.ambient() == 4);
  CHECK(c.dim() == 2);
  CHECK(c.basis()(1, 0) == 1.0);
  CHECK(c.basis()(3, 1) == 1.0);
}

TEST_CASE("tolerances must be positive") {
  Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.eq = 0.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t = {};
  t.rank = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("orthonormalize") {
  SUBCASE("axis-aligned scaling") {
    const Matrix q = orthonormalize(Subspace(m({{2, 0}, {0, 3}, {0, 0}}))).basis();
    CHECK(max_abs(q - m({{1, 0}, {0, 1}, {0, 0}})) < 1e-15);
  }
  SUBCASE("single vector") {
    const Matrix q = orthonormalize(Subspace(m({{1}, {1}, {0}}))).basis();
    CHECK(q(0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(q(1, 0) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(q(2, 0) == 0.0);
  }
  SUBCASE("random bases: orthonormal, same span, idempotent") {
    random::Engine rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = random::uniform_index(rng, 1, 10);
      const Index k = random::uniform_index(rng, 1, n);
      const auto s = random::subspace(rng, n, k);
      const Subspace q = orthonormalize(s);
      CHECK(max_abs(q.basis().transpose() * q.basis() - Matrix::Identity(q.basis().cols(), q.basis().cols())) < 1e-10);
      CHECK(oracle::span_distance(q.basis(), s.basis()) < 1e-10);
      CHECK(max_abs(orthonormalize(q).basis() - q.basis()) < 1e-9);
      for (Eigen::Index j = 0; j < q.basis().cols(); ++j) {
        CHECK(q.basis().col(j).dot(s.basis().col(j)) > 0.0);
      }
    }
  }
}

TEST_CASE("orthogonal complement") {
  const Matrix c = orthogonal_complement(Subspace::coordinate(3, {0})).basis();
  CHECK(c.cols() == 2);
  CHECK(max_abs(c.row(0)) < 1e-15);

  const Matrix d = orthogonal_complement(Subspace(m({{1}, {1}, {0}}))).basis();
  CHECK(std::abs(d.col(0).dot(Vector(Eigen::Vector3d(1, 1, 0)))) < 1e-12);
  CHECK(std::abs(d.col(1).dot(Vector(Eigen::Vector3d(1, 1, 0)))) < 1e-12);

  try {
    orthogonal_complement(Subspace(Matrix::Identity(3, 3)));
    FAIL("complement of the full space");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FullSpace);
  }

  random::Engine rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = random::uniform_index(rng, 2, 9);
    const Index k = random::uniform_index(rng, 1, n - 1);
    const auto s = random::subspace(rng, n, k);
    Matrix full(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    full << orthonormalize(s).basis(), orthogonal_complement(s).basis();
    CHECK(max_abs(full.transpose() * full - Matrix::Identity(full.rows(), full.rows())) < 1e-9);
  }
}

TEST_CASE("rank and null space") {
  CHECK(numerical_rank(m({{1, 2}, {2, 4}}), 1e-10) == 1);
  CHECK(numerical_rank(Matrix::Identity(4, 4), 1e-10) == 4);
  CHECK(numerical_rank(Matrix::Zero(3, 3), 1e-10) == 0);
  const Matrix z = null_space(m({{1, 1, 1}}), 1e-10);
  CHECK(z.cols() == 2);
  CHECK(max_abs(m({{1, 1, 1}}) * z) < 1e-12);
  CHECK(column_space(m({{1, 2}, {2, 4}}), 1e-10).cols() == 1);
}

TEST_CASE("symmetric eigendecomposition") {
  const auto e = symmetric_eigendecomposition(Matrix(Vector(Eigen::Vector3d(1, 3, 3)).asDiagonal()));
  CHECK(e.values(0) == doctest::Approx(1.0));
  CHECK(e.values(1) == doctest::Approx(3.0));
  CHECK(e.values(2) == doctest::Approx(3.0));

  const auto id = symmetric_eigendecomposition(Matrix::Identity(4, 4));
  CHECK(max_abs(id.values - Vector::Ones(4)) < 1e-15);

  CHECK_THROWS_AS(symmetric_eigendecomposition(m({{1, 2}, {0, 1}})), Error);

  random::Engine rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random::gaussian(rng, 5, 5);
    const Matrix s = a + a.transpose();
    const auto d = symmetric_eigendecomposition(s);
    const double scale = max_abs(s);
    CHECK(max_abs(d.vectors * d.values.asDiagonal() * d.vectors.transpose() - s) < 1e-8 * scale);
    CHECK(max_abs(d.vectors.transpose() * d.vectors - Matrix::Identity(5, 5)) < 1e-9);
    CHECK(std::abs(d.values.sum() - s.trace()) < 1e-8 * scale);
    for (Eigen::Index i = 1; i < 5; ++i) CHECK(d.values(i - 1) <= d.values(i));
  }
}

TEST_CASE("solve_linear") {
  const Matrix b = m({{1, 2, 3}, {4, 5, 6}});
  CHECK(max_abs(solve_linear(Matrix::Identity(2, 2), b) - b) == 0.0);
  const Matrix x = solve_linear(m({{2, 0}, {0, 4}}), Matrix::Identity(2, 2));
  CHECK(max_abs(x - m({{0.5, 0}, {0, 0.25}})) < 1e-15);
  try {
    solve_linear(m({{1, 2}, {2, 4}}), Matrix::Identity(2, 2));
    FAIL("singular system solved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
  CHECK_THROWS_AS(solve_linear(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Error);

  random::Engine rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random::gaussian(rng, 6, 6);
    const Matrix rhs = random::gaussian(rng, 6, 2);
    CHECK((a * solve_linear(a, rhs) - rhs).norm() < 1e-8 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("containment and span equality") {
  const auto plane = Subspace(m({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(contains(plane, m({{3}, {-2}, {0}})));
  CHECK_FALSE(contains(plane, m({{0}, {0}, {1}})));
  CHECK(span_equal(plane, Subspace(m({{1, 1}, {1, -1}, {0, 0}}))));
  CHECK_FALSE(span_equal(plane, Subspace(m({{1, 0}, {0, 0}, {0, 1}}))));
  CHECK_FALSE(span_equal(plane, Subspace::coordinate(3, {0})));
}

TEST_CASE("index helpers") {
  CHECK(complement_indices(5, {1, 3}) == IndexSet{0, 2, 4});
  CHECK(complement_indices(2, {}) == IndexSet{0, 1});
  const Matrix s = selection_matrix(3, {2, 0});
  CHECK(s(2, 0) == 1.0);
  CHECK(s(0, 1) == 1.0);
  CHECK(s.sum() == 2.0);
}

TEST_CASE("random generators are seeded") {
  random::Engine a(42), b(42);
  CHECK(max_abs(random::gaussian(a, 3, 4) - random::gaussian(b, 3, 4)) == 0.0);
  random::Engine rng(1);
  const Matrix u = random::orthogonal(rng, 6);
  CHECK(max_abs(u.transpose() * u - Matrix::Identity(6, 6)) < 1e-12);
  CHECK(random::unit_vector(rng, 7).norm() == doctest::Approx(1.0));
  for (int i = 0; i < 100; ++i) {
    const Index v = random::uniform_index(rng, 2, 5);
    CHECK(v >= 2);
    CHECK(v <= 5);
  }
}
