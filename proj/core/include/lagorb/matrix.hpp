#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lagorb/error.hpp"
#include "lagorb/field.hpp"

namespace lagorb {

/// Dense row-major matrix over an exact field. Vectors are single columns.
template <class S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix() = default;
  Matrix(FieldTag field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        data_(rows * cols, scalar_traits<S>::from_int(0, field)) {
    require(scalar_traits<S>::compatible(field), ErrorCode::Precondition,
            "field tag does not match scalar type");
  }

  static Matrix identity(FieldTag field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.scalar(1);
    return m;
  }

  static Matrix from_ints(FieldTag field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == c, ErrorCode::Shape, "ragged matrix literal");
      std::size_t j = 0;
      for (std::int64_t v : row) m(i, j++) = m.scalar(v);
      ++i;
    }
    return m;
  }

  /// Column vector from integer entries.
  static Matrix column(FieldTag field, std::initializer_list<std::int64_t> entries) {
    Matrix m(field, entries.size(), 1);
    std::size_t i = 0;
    for (std::int64_t v : entries) m(i++, 0) = m.scalar(v);
    return m;
  }

  static Matrix from_columns(FieldTag field, std::size_t rows, const std::vector<Matrix>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  const FieldTag& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S scalar(std::int64_t v) const { return scalar_traits<S>::from_int(v, field_); }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> entries() const { return data_; }

  Matrix col(std::size_t j) const {
    Matrix out(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
  }

  void set_col(std::size_t j, const Matrix& v) {
    require(v.rows_ == rows_ && v.cols_ == 1, ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorCode::DimensionMismatch, "block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorCode::DimensionMismatch,
            "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const S& x : data_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (S& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix out = *this;
    for (S& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    require(a.field_ == b.field_, ErrorCode::DimensionMismatch, "matrix product field mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (scalar_traits<S>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_, ErrorCode::DimensionMismatch,
            "matrix shape mismatch");
  }

  FieldTag field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix<S> out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix<S> out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

/// Unit column e_k of length n.
template <class S>
Matrix<S> unit_vector(FieldTag field, std::size_t n, std::size_t k) {
  Matrix<S> v(field, n, 1);
  v(k, 0) = v.scalar(1);
  return v;
}

using QMat = Matrix<Rational>;
using FpMat = Matrix<Zp>;

}  // namespace lagorb
