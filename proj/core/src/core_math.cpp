#include "gitfan/core_math.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gitfan {

namespace {

void remove_content(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

struct Echelon {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination that keeps every row integral: a row update is
// r <- p * r - r[c] * pivot_row, followed by removal of the row content.
Echelon integer_rref(std::vector<IntVector> rows, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    remove_content(rows[r]);
    const Integer p = rows[r][c];
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Integer f = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j) rows[k][j] = p * rows[k][j] - f * rows[r][j];
      remove_content(rows[k]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

// Rational Gauss-Jordan to reduced row echelon form, in place; returns pivots.
std::vector<std::size_t> rational_rref(QMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k == r || m(k, c) == 0) continue;
      const Rational f = m(k, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(k, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<IntVector> matrix_rows(const IntMatrix& m) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("int_matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

std::optional<IntMatrix> to_integer(const QMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      z(i, j) = m(i, j).get_num();
    }
  }
  return z;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

QVector to_rational(const IntVector& v) { return QVector(v.begin(), v.end()); }

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}
bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

IntVector primitive(const QVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  remove_content(out);
  return out;
}

IntVector primitive(IntVector v) {
  remove_content(v);
  return v;
}

IntVector primitive_line(IntVector v) {
  remove_content(v);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::size_t rank(const IntMatrix& m) { return integer_rref(matrix_rows(m), m.cols()).pivots.size(); }

std::size_t rank(std::span<const IntVector> rows, std::size_t cols) {
  return integer_rref(std::vector<IntVector>(rows.begin(), rows.end()), cols).pivots.size();
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const Echelon e = integer_rref(matrix_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const auto p = e.pivots[i];
      x[p] = Rational(-e.rows[i][f], e.rows[i][p]);
      x[p].canonicalize();
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

std::vector<IntVector> canonical_row_basis(std::span<const IntVector> rows, std::size_t cols) {
  Echelon e = integer_rref(std::vector<IntVector>(rows.begin(), rows.end()), cols);
  for (auto& r : e.rows) r = primitive_line(std::move(r));
  return std::move(e.rows);
}

std::optional<QMatrix> solve_right(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_right: column count mismatch");
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  const std::size_t m = b.rows();
  // A^T X^T = B^T as an augmented n x (k + m) system.
  QMatrix aug(n, k + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < m; ++j) aug(i, k + j) = b(j, i);
  }
  const auto pivots = rational_rref(aug, k);
  if (pivots.size() != k) throw std::invalid_argument("solve_right: A must have full row rank");
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (aug(i, k + j) != 0) return std::nullopt;
    }
  }
  QMatrix x(m, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) x(j, pivots[i]) = aug(i, k + j);
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (rational_rref(aug, n).size() != n) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QVector project_out(const QVector& v, std::span<const IntVector> basis) {
  std::vector<QVector> ortho;
  for (const auto& b : basis) {
    QVector u = to_rational(b);
    for (const auto& o : ortho) {
      const Rational f = dot(u, o) / dot(o, o);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= f * o[i];
    }
    if (!is_zero(u)) ortho.push_back(std::move(u));
  }
  QVector out = v;
  for (const auto& o : ortho) {
    const Rational f = dot(out, o) / dot(o, o);
    if (f == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * o[i];
  }
  return out;
}

}  // namespace gitfan
