#pragma once

// Exact integer/rational scalars, vectors and matrices.
//
// All computation is carried out over Q. Inputs with rational data give the
// same Groebner bases and a-face verdicts over Q as over its algebraic
// closure, so no field extension is ever needed.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

namespace gitfan {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Dense row-major matrix. Used with Integer and Rational entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  [[nodiscard]] std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
QMatrix to_rational(const IntMatrix& m);
/// Integer matrix if every entry has denominator 1.
std::optional<IntMatrix> to_integer(const QMatrix& m);

QMatrix operator*(const QMatrix& a, const QMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

// ---- vectors -------------------------------------------------------------

Rational dot(const QVector& a, const QVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const QVector& b);

QVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const QVector& v);

/// Unique integer vector with gcd 1 that is a positive multiple of v.
/// The zero vector maps to the zero vector.
IntVector primitive(const QVector& v);
IntVector primitive(IntVector v);

/// Primitive form with the first nonzero entry made positive (line direction).
IntVector primitive_line(IntVector v);

std::string to_string(const IntVector& v);
std::string to_string(const QVector& v);

// ---- linear algebra --------------------------------------------------------

/// Rank over Q by fraction-free elimination.
std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const IntVector> rows, std::size_t cols);

/// Basis of the right null space {v : M v = 0}, primitive integer vectors.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Reduced row echelon basis of the row span, each row scaled to a primitive
/// integer vector. Unique for a given subspace, so usable as a canonical form.
std::vector<IntVector> canonical_row_basis(std::span<const IntVector> rows, std::size_t cols);

/// Solve X * A = B for X. Returns nullopt when no solution exists.
/// Requires A to have full row rank (unique solution when it exists).
std::optional<QMatrix> solve_right(const QMatrix& a, const QMatrix& b);

/// Inverse of a square matrix, nullopt if singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
QVector project_out(const QVector& v, std::span<const IntVector> basis);

}  // namespace gitfan
