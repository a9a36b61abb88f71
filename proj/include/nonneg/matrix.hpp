#ifndef NONNEG_MATRIX_HPP
#define NONNEG_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/scalar.hpp"

namespace nonneg {

template <Scalar T>
using Vector = std::vector<T>;

/// Dense row-major matrix. APPROX instances reject NaN/Inf on construction
/// from external data.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw UsageError("ragged rows in matrix literal");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    m.check_finite();
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  /// Builds an n x k matrix whose columns are the given vectors.
  static Matrix from_columns(std::size_t n, const std::vector<Vector<T>>& cols) {
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw UsageError("column length differs from ambient dimension");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    m.check_finite();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void check_finite() const {
    for (const T& x : data_)
      if (!scalar_traits<T>::finite(x)) throw UsageError("matrix entries must be finite");
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Scalar T>
T max_abs(std::span<const T> a) {
  T m(0);
  for (const T& x : a) m = std::max<T>(m, abs_value(x));
  return m;
}

template <Scalar T>
T sum(std::span<const T> a) {
  T s(0);
  for (const T& x : a) s += x;
  return s;
}

template <Scalar T>
T min_element_value(std::span<const T> a) {
  return *std::min_element(a.begin(), a.end());
}

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <Scalar T>
Vector<T> multiply(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw UsageError("matrix-vector dimension mismatch");
  Vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot<T>(a.row(i), x);
  return y;
}

/// max_ij |a_ij - b_ij|
template <Scalar T>
T max_abs_difference(const Matrix<T>& a, const Matrix<T>& b) {
  T m(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max<T>(m, abs_value<T>(a(i, j) - b(i, j)));
  return m;
}

template <Scalar T>
Matrix<T> convert_matrix(const Matrix<double>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar_traits<T>::from_double(m(i, j));
  return out;
}

template <Scalar T>
Matrix<double> to_double_matrix(const Matrix<T>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

template <Scalar T>
Vector<double> to_double_vector(std::span<const T> v) {
  Vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

}  // namespace nonneg

#endif  // NONNEG_MATRIX_HPP
