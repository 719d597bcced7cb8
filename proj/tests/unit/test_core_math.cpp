#include <doctest.h>

#include <random>

#include "gitfan/core_math.hpp"

using namespace gitfan;

namespace {

// Plain rational Gaussian elimination, kept separate from the library's
// fraction-free routine.
std::size_t oracle_rank(const IntMatrix& m) {
  std::vector<QVector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_rational(m.row(i)));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

const IntMatrix kCubeQ = int_matrix({{1, -1, -1, 1}, {1, 1, -1, -1}});

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(kCubeQ) == 2);
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(rank(IntMatrix::identity(4)) == 4);
  CHECK(rank(int_matrix({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank agrees with a rational elimination oracle") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    IntMatrix m = random_matrix(rng, rows, cols, -2, 2);
    if (rows > 2 && iter % 3 == 0) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3 - m(1, j);
    }
    CHECK(rank(m) == oracle_rank(m));
  }
}

TEST_CASE("kernel basis") {
  auto k = kernel_basis(kCubeQ);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero(mat_vec(kCubeQ, v)));
  // Same span as {(1,0,1,0),(0,1,0,1)}.
  std::vector<IntVector> both = k;
  both.push_back({1, 0, 1, 0});
  both.push_back({0, 1, 0, 1});
  CHECK(rank(both, 4) == 2);

  CHECK(kernel_basis(IntMatrix::identity(2)).empty());
  auto k1 = kernel_basis(int_matrix({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(primitive_line(k1[0]) == IntVector{1, -1});
}

TEST_CASE("kernel property on random matrices") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 8;
    const IntMatrix m = random_matrix(rng, rows, cols, -3, 3);
    const auto k = kernel_basis(m);
    CHECK(k.size() == cols - oracle_rank(m));
    for (const auto& v : k) CHECK(is_zero(mat_vec(m, v)));
    if (!k.empty()) CHECK(rank(k, cols) == k.size());
  }
}

TEST_CASE("solve_right gives the induced matrices of the square") {
  const QMatrix q = to_rational(kCubeQ);
  // Columns of Q permuted: (Q P_sigma)_j = q_{sigma(j)}.
  auto permuted = [&](const std::vector<std::size_t>& sigma) {
    QMatrix b(2, 4);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 2; ++i) b(i, j) = q(i, sigma[j]);
    return b;
  };
  auto a1 = solve_right(q, permuted({1, 0, 3, 2}));
  REQUIRE(a1);
  CHECK(*a1 == to_rational(int_matrix({{-1, 0}, {0, 1}})));
  auto a2 = solve_right(q, permuted({1, 2, 3, 0}));
  REQUIRE(a2);
  CHECK(*a2 == to_rational(int_matrix({{0, -1}, {1, 0}})));
  CHECK(*a1 * q == permuted({1, 0, 3, 2}));

  const QMatrix id = QMatrix::identity(3);
  auto x = solve_right(id, id);
  REQUIRE(x);
  CHECK(*x == id);

  // B outside the row space.
  CHECK_FALSE(solve_right(to_rational(int_matrix({{1, 0, 0}})), to_rational(int_matrix({{0, 1, 0}}))));
}

TEST_CASE("solve_right result satisfies X A = B on random systems") {
  std::mt19937 rng(3);
  int solved = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const IntMatrix a = random_matrix(rng, 3, 5, -3, 3);
    if (rank(a) < 3) continue;
    const IntMatrix x0 = random_matrix(rng, 2, 3, -2, 2);
    const QMatrix b = to_rational(x0 * a);
    auto x = solve_right(to_rational(a), b);
    REQUIRE(x);
    CHECK(*x * to_rational(a) == b);
    ++solved;
  }
  CHECK(solved > 50);
}

TEST_CASE("inverse") {
  auto inv = inverse(to_rational(int_matrix({{2, 1}, {1, 1}})));
  REQUIRE(inv);
  CHECK(*inv == to_rational(int_matrix({{1, -1}, {-1, 2}})));
  CHECK_FALSE(inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))));
}

TEST_CASE("primitive normalization is idempotent and direction preserving") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-12, 12);
  for (int iter = 0; iter < 300; ++iter) {
    QVector v(4);
    for (auto& x : v) x = Rational(d(rng), 1 + rng() % 5);
    for (auto& x : v) x.canonicalize();
    const IntVector p = primitive(v);
    CHECK(primitive(p) == p);
    if (is_zero(v)) {
      CHECK(is_zero(p));
      continue;
    }
    // p = c v with c > 0.
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    const Rational c = Rational(p[i]) / v[i];
    CHECK(c > 0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(Rational(p[j]) == c * v[j]);
  }
  CHECK(primitive_line({-2, 4, 0}) == IntVector{1, -2, 0});
  CHECK(primitive(QVector{Rational(1, 2), Rational(-3, 4)}) == IntVector{2, -3});
}

TEST_CASE("canonical row basis depends only on the span") {
  const std::vector<IntVector> a{{1, 1, 0}, {0, 1, 1}};
  const std::vector<IntVector> b{{1, 2, 1}, {2, 1, -1}};
  CHECK(canonical_row_basis(a, 3) == canonical_row_basis(b, 3));
  const std::vector<IntVector> c{{1, 0, 0}, {0, 1, 0}};
  CHECK(canonical_row_basis(a, 3) != canonical_row_basis(c, 3));
}

TEST_CASE("project_out") {
  const std::vector<IntVector> basis{{1, 1, 0}};
  const QVector p = project_out(QVector{2, 0, 5}, basis);
  CHECK(p == QVector{1, -1, 5});
  CHECK(dot(p, to_rational(basis[0])) == 0);
}
