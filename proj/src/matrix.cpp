#include "hompois/matrix.hpp"

#include "hompois/errors.hpp"

namespace hompois {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw shape_error("matrix-vector size mismatch");
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!x[j].is_zero()) r[i] += at(i, j) * x[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

bool Matrix::is_zero() const { return hompois::is_zero(data_); }

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw shape_error("matrix shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw shape_error("matrix shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw shape_error("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Rational& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (!square()) return std::nullopt;
  const std::size_t n = rows_;
  Matrix work(*this);
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    }
    const Rational scale = work.at(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(c, j) *= scale;
      inv.at(c, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || work.at(r, c).is_zero()) continue;
      const Rational f = work.at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw singular_error("matrix is singular");
  return *std::move(inv);
}

}  // namespace hompois
