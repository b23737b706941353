#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcomm/exactalg/field.hpp"

namespace nilcomm {

template <class K>
using Vec = std::vector<K>;

// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field<K> field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

  static Matrix identity(std::size_t n, Field<K> field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, Field<K> field) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field<K> field) {
    std::vector<Vec<K>> converted;
    for (const auto& r : rows) {
      Vec<K> row;
      for (long v : r) row.push_back(field.from_int(v));
      converted.push_back(std::move(row));
    }
    return from_rows(converted, field);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field<K>& field() const { return field_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<K> column(std::size_t j) const {
    Vec<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void set_column(std::size_t j, const Vec<K>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!nilcomm::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Matrix b(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
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
  Matrix& operator*=(const K& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
  friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, a.field_);
    K t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (nilcomm::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (nilcomm::is_zero(b(k, j))) continue;
          t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<K> out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!nilcomm::is_zero(a(i, j)) && !nilcomm::is_zero(v[j])) out[i] += a(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  // Matrix with a single entry of e at (i, j).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, Field<K> field) {
    Matrix m(rows, cols, field);
    m(i, j) = field.one();
    return m;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  Field<K> field_;
  std::vector<K> data_;
};

template <class K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

template <class K>
K trace(const Matrix<K>& a) {
  if (!a.is_square()) throw std::invalid_argument("trace of a non-square matrix");
  K t = a.field().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

template <class K>
Matrix<K> power(const Matrix<K>& a, unsigned e) {
  if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix<K> result = Matrix<K>::identity(a.rows(), a.field());
  Matrix<K> base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace nilcomm
