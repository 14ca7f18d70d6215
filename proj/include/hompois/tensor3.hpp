#pragma once

#include <cstddef>

#include "hompois/matrix.hpp"
#include "hompois/rational.hpp"

namespace hompois {

/// Rank-3 tensor of exact rationals with fixed index order (i, j, k).
///
/// Two conventions are used throughout and documented once here:
///   * product tensors:   t[i][j][k] = coefficient of e_k in e_i * e_j;
///   * coproduct tensors: t[i][j][k] = coefficient of e_j (x) e_k in D(e_i).
class Tensor3 {
 public:
  Tensor3() : d0_(0), d1_(0), d2_(0) {}
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Rational(0)) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  /// (x * y)_k = sum_ij x_i y_j t[i][j][k]; bilinear in both arguments.
  Vec apply_bilinear(const Vec& x, const Vec& y) const;

  /// The vector e_i * e_j (row (i, j) of a product tensor).
  Vec slice(std::size_t i, std::size_t j) const;

  /// For a product tensor: the matrix of left multiplication by w.
  Matrix left_operator(const Vec& w) const;
  /// For a product tensor: the matrix of right multiplication by w.
  Matrix right_operator(const Vec& w) const;

  /// For a coproduct tensor: the dim1 x dim2 coefficient matrix of D(e_i).
  Matrix component(std::size_t i) const;
  void set_component(std::size_t i, const Matrix& m);

  Tensor3 swap01() const;  // t'[i][j][k] = t[j][i][k]
  Tensor3 swap12() const;  // t'[i][j][k] = t[i][k][j]

  bool is_zero() const { return hompois::is_zero(data_); }

  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rational& c, Tensor3 t);
  friend bool operator==(const Tensor3& a, const Tensor3& b);

  Vec flatten() const { return data_; }

 private:
  std::size_t d0_, d1_, d2_;
  Vec data_;
};

/// Element of A (x) A given by its coefficient matrix:
/// coeffs[i][j] = coefficient of e_i (x) e_j.
struct TensorElement {
  std::size_t dim = 0;
  Matrix coeffs;

  TensorElement() = default;
  explicit TensorElement(std::size_t n) : dim(n), coeffs(n, n) {}
  TensorElement(std::size_t n, Matrix c);

  /// The flip u (x) v -> v (x) u; an involution.
  TensorElement flip() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

}  // namespace hompois
