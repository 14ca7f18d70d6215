#include "hompois/tensor3.hpp"

#include "hompois/errors.hpp"

namespace hompois {

Vec Tensor3::apply_bilinear(const Vec& x, const Vec& y) const {
  if (x.size() != d0_ || y.size() != d1_) {
    throw shape_error("bilinear application: dimension mismatch");
  }
  Vec r(d2_, Rational(0));
  for (std::size_t i = 0; i < d0_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < d2_; ++k) {
        const Rational& t = at(i, j, k);
        if (!t.is_zero()) r[k] += c * t;
      }
    }
  }
  return r;
}

Vec Tensor3::slice(std::size_t i, std::size_t j) const {
  Vec r(d2_, Rational(0));
  for (std::size_t k = 0; k < d2_; ++k) r[k] = at(i, j, k);
  return r;
}

Matrix Tensor3::left_operator(const Vec& w) const {
  if (w.size() != d0_) throw shape_error("left operator: dimension mismatch");
  Matrix m(d2_, d1_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (w[i].is_zero()) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) {
        m.at(k, j) += w[i] * at(i, j, k);
      }
    }
  }
  return m;
}

Matrix Tensor3::right_operator(const Vec& w) const {
  if (w.size() != d1_) throw shape_error("right operator: dimension mismatch");
  Matrix m(d2_, d0_);
  for (std::size_t j = 0; j < d1_; ++j) {
    if (w[j].is_zero()) continue;
    for (std::size_t i = 0; i < d0_; ++i) {
      for (std::size_t k = 0; k < d2_; ++k) {
        m.at(k, i) += w[j] * at(i, j, k);
      }
    }
  }
  return m;
}

Matrix Tensor3::component(std::size_t i) const {
  Matrix m(d1_, d2_);
  for (std::size_t j = 0; j < d1_; ++j) {
    for (std::size_t k = 0; k < d2_; ++k) m.at(j, k) = at(i, j, k);
  }
  return m;
}

void Tensor3::set_component(std::size_t i, const Matrix& m) {
  if (m.rows() != d1_ || m.cols() != d2_) {
    throw shape_error("component shape mismatch");
  }
  for (std::size_t j = 0; j < d1_; ++j) {
    for (std::size_t k = 0; k < d2_; ++k) at(i, j, k) = m.at(j, k);
  }
}

Tensor3 Tensor3::swap01() const {
  Tensor3 t(d1_, d0_, d2_);
  for (std::size_t i = 0; i < d0_; ++i) {
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) t.at(j, i, k) = at(i, j, k);
    }
  }
  return t;
}

Tensor3 Tensor3::swap12() const {
  Tensor3 t(d0_, d2_, d1_);
  for (std::size_t i = 0; i < d0_; ++i) {
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) t.at(i, k, j) = at(i, j, k);
    }
  }
  return t;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_) {
    throw shape_error("tensor shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_) {
    throw shape_error("tensor shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Tensor3 operator*(const Rational& c, Tensor3 t) {
  for (auto& x : t.data_) x *= c;
  return t;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ &&
         a.data_ == b.data_;
}

TensorElement::TensorElement(std::size_t n, Matrix c)
    : dim(n), coeffs(std::move(c)) {
  if (coeffs.rows() != n || coeffs.cols() != n) {
    throw shape_error("tensor element coefficient shape mismatch");
  }
}

TensorElement TensorElement::flip() const {
  TensorElement t(dim);
  t.coeffs = coeffs.transpose();
  return t;
}

}  // namespace hompois
