#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sgcc/errors.hpp"
#include "sgcc/scalar.hpp"

namespace sgcc {

/// Dense row-major matrix over a single exact scalar domain.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw ShapeError("ragged matrix rows");
      m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
  }

  /// `one` fixes the scalar domain (and modulus, for residues).
  static Matrix identity(std::size_t n, const T& one = T(1)) {
    const T zero = ScalarTraits<T>::zero_like(one);
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> entries() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? T{} : data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
  friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_)
      throw ShapeError("matrix product: " + x.shape_string() + " times " + y.shape_string());
    const T zero = !x.data_.empty() ? ScalarTraits<T>::zero_like(x.data_.front())
                 : !y.data_.empty() ? ScalarTraits<T>::zero_like(y.data_.front())
                                    : T{};
    Matrix r(x.rows_, y.cols_, zero);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& a = x(i, k);
        if (ScalarTraits<T>::is_zero(a)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += a * y(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << to_string(m(i, j));
      os << ']';
    }
    return os << ']';
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("shape mismatch: " + shape_string() + " vs " + o.shape_string());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using ModMatrix = Matrix<Residue>;

RatMatrix to_rational(const IntMatrix& m);

/// Throws DomainError if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);

/// Entrywise reduction into Z/L. Rational entries are read as num * den^{-1};
/// a denominator sharing a factor with L is a DomainError.
ModMatrix mod_reduce(const RatMatrix& m, std::int64_t modulus);
ModMatrix mod_reduce(const IntMatrix& m, std::int64_t modulus);

bool is_nonnegative(const IntMatrix& m);

}  // namespace sgcc
