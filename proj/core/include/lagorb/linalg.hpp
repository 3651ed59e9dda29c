#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagorb/matrix.hpp"

namespace lagorb {

template <class S>
struct RrefResult {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pr = row;
    while (pr < m.rows() && is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    S inv = m.scalar(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      S factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank();
}

template <class S>
class Subspace;

/// Basis columns of {x : Mx = 0}, one per free column, unnormalized.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<S> out(m.field(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    out(f, k) = m.scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -r(i, f);
  }
  return out;
}

/// Any X with A X = B, or nullopt when the system is inconsistent.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "solve: row mismatch");
  auto [r, pivots] = rref(hstack(a, b));
  for (std::size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<S> x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  require(m.is_square(), ErrorCode::Shape, "inverse of non-square matrix");
  std::size_t n = m.rows();
  auto [r, pivots] = rref(hstack(m, Matrix<S>::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) fail(ErrorCode::Singular, "matrix is singular");
  return r.block(0, n, n, n);
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// Linear subspace of F^n stored by a basis in reduced column-echelon form:
/// the transpose of the basis matrix is in reduced row-echelon form. Two
/// subspaces are equal iff their stored bases are identical.
template <class S>
class Subspace {
 public:
  Subspace() = default;

  /// Column span of `generators` (any number of columns, dependent or not).
  static Subspace span(const Matrix<S>& generators) {
    auto [r, pivots] = rref(generators.transpose());
    Subspace s;
    s.field_ = generators.field();
    s.ambient_ = generators.rows();
    s.basis_ = r.block(0, 0, pivots.size(), r.cols()).transpose();
    s.pivots_ = std::move(pivots);
    return s;
  }

  static Subspace zero(FieldTag field, std::size_t n) { return span(Matrix<S>(field, n, 0)); }
  static Subspace full(FieldTag field, std::size_t n) { return span(Matrix<S>::identity(field, n)); }

  const FieldTag& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }
  /// Row index of the leading entry of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Matrix<S>& v) const {
    require(v.rows() == ambient_, ErrorCode::DimensionMismatch, "vector length mismatch");
    for (std::size_t c = 0; c < v.cols(); ++c) {
      Matrix<S> w = v.col(c);
      // Reduce w against the echelon basis; pivot entries determine the coefficients.
      for (std::size_t k = 0; k < dim(); ++k) {
        S coeff = w(pivots_[k], 0);
        if (is_zero(coeff)) continue;
        for (std::size_t i = 0; i < ambient_; ++i) w(i, 0) -= coeff * basis_(i, k);
      }
      if (!w.is_zero()) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const { return contains(other.basis_); }

  /// Byte key usable for hashing and ordering.
  std::string key() const {
    std::string out = std::to_string(ambient_) + ":" + std::to_string(dim()) + ":";
    for (const S& x : basis_.entries()) {
      out += scalar_traits<S>::to_string(x);
      out += ',';
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldTag field_;
  std::size_t ambient_ = 0;
  Matrix<S> basis_;
  std::vector<std::size_t> pivots_;
};

template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  return Subspace<S>::span(kernel_basis(m));
}

template <class S>
bool member(const Matrix<S>& v, const Subspace<S>& s) {
  return s.contains(v);
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  require(a.ambient_dim() == b.ambient_dim() && a.field() == b.field(), ErrorCode::DimensionMismatch,
          "subspace_sum: ambient mismatch");
  return Subspace<S>::span(hstack(a.basis(), b.basis()));
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  require(a.ambient_dim() == b.ambient_dim() && a.field() == b.field(), ErrorCode::DimensionMismatch,
          "intersect: ambient mismatch");
  // A x = B y  <=>  [A | -B] (x, y) = 0
  Matrix<S> ker = kernel_basis(hstack(a.basis(), -b.basis()));
  return Subspace<S>::span(a.basis() * ker.block(0, 0, a.dim(), ker.cols()));
}

/// Image of a subspace under a linear map.
template <class S>
Subspace<S> image(const Matrix<S>& map, const Subspace<S>& s) {
  return Subspace<S>::span(map * s.basis());
}

/// A complement C of S inside T (S + C = T, S ∩ C = 0). Candidates are the
/// canonical basis columns of T taken in pivot order; each is kept when it
/// is independent of S and the columns already kept.
template <class S>
Subspace<S> complement_in(const Subspace<S>& s, const Subspace<S>& t) {
  require(s.ambient_dim() == t.ambient_dim(), ErrorCode::DimensionMismatch, "complement_in: ambient mismatch");
  require(t.contains(s), ErrorCode::Precondition, "complement_in: S is not contained in T");
  Matrix<S> acc = s.basis();
  std::size_t r = s.dim();
  std::vector<Matrix<S>> chosen;
  for (std::size_t k = 0; k < t.dim() && r < t.dim(); ++k) {
    Matrix<S> candidate = t.basis().col(k);
    Matrix<S> trial = hstack(acc, candidate);
    if (rank(trial) > r) {
      acc = std::move(trial);
      ++r;
      chosen.push_back(std::move(candidate));
    }
  }
  return Subspace<S>::span(Matrix<S>::from_columns(s.field(), s.ambient_dim(), chosen));
}

/// Rows whose common kernel is exactly `s`.
template <class S>
Matrix<S> annihilator(const Subspace<S>& s) {
  return kernel_basis(s.basis().transpose()).transpose();
}

using QSubspace = Subspace<Rational>;
using FpSubspace = Subspace<Zp>;

}  // namespace lagorb
