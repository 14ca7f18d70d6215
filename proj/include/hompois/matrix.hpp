#pragma once

#include <cstddef>
#include <optional>

#include "hompois/rational.hpp"

namespace hompois {

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Column j as a vector; for a map written in a basis this is the image
  /// of the j-th basis vector.
  Vec col(std::size_t j) const;

  Vec apply(const Vec& x) const;  // matrix * column vector
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Exact inverse by Gauss-Jordan elimination.
  /// Returns nothing when the matrix is singular (or not square).
  std::optional<Matrix> try_inverse() const;

  /// As try_inverse, but throws singular_error.
  Matrix inverse() const;

  bool invertible() const { return try_inverse().has_value(); }

  /// Row-major flattening, used as a report residual.
  Vec flatten() const { return data_; }

 private:
  std::size_t rows_, cols_;
  Vec data_;
};

}  // namespace hompois
