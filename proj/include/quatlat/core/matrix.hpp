#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "quatlat/core/error.hpp"
#include "quatlat/core/rational.hpp"

namespace quatlat {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw PreconditionError("ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }

  /// row(dst) -= factor * row(src)
  void sub_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      data_[dst * cols_ + j] -= factor * data_[src * cols_ + j];
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
      data_[i * cols_ + j] = -data_[i * cols_ + j];
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw PreconditionError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& v) { return v == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.data_) v *= s;
    return m;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Least common multiple of all denominators.
inline Integer common_denominator(const RatMatrix& m) {
  Integer d = 1;
  for (const auto& v : m.data()) d = lcm(d, v.get_den());
  return d;
}

inline Integer common_denominator(std::span<const Rational> v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

/// m * scale, which must be integral.
inline IntMatrix to_integer(const RatMatrix& m, const Integer& scale = 1) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * scale;
      if (v.get_den() != 1) throw PreconditionError("matrix is not integral");
      r(i, j) = v.get_num();
    }
  return r;
}

/// v * G * w^T for integer coordinate vectors.
template <typename T>
T quadratic_form(const Matrix<T>& gram, std::span<const Integer> v,
                 std::span<const Integer> w) {
  T acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    T inner(0);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) inner += gram(i, j) * T(w[j]);
    acc += T(v[i]) * inner;
  }
  return acc;
}

/// U * G * U^T.
template <typename T, typename S>
Matrix<T> congruence(const Matrix<S>& u, const Matrix<T>& g) {
  Matrix<T> uu(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) uu(i, j) = T(u(i, j));
  return uu * g * uu.transpose();
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << to_string(m(i, j));
    os << "]";
  }
  return os << "]";
}

}  // namespace quatlat
