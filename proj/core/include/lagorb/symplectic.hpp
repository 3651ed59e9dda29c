#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "lagorb/linalg.hpp"

namespace lagorb {

/// (F^dim, Ω) with Ω(x, y) = xᵀ G y for an alternating invertible G.
template <class S>
class SymplecticSpace {
 public:
  SymplecticSpace() = default;

  explicit SymplecticSpace(Matrix<S> gram) : gram_(std::move(gram)) {
    require(gram_.is_square(), ErrorCode::Shape, "gram matrix must be square");
    require(gram_.rows() % 2 == 0, ErrorCode::Shape, "symplectic space must be even-dimensional");
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
      require(is_zero(gram_(i, i)), ErrorCode::Precondition, "gram matrix must be alternating");
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        require(gram_(i, j) == -gram_(j, i), ErrorCode::Precondition, "gram matrix must be antisymmetric");
    }
    require(is_invertible(gram_), ErrorCode::Precondition, "gram matrix must be nondegenerate");
  }

  const FieldTag& field() const { return gram_.field(); }
  std::size_t dim() const { return gram_.rows(); }
  std::size_t half_dim() const { return gram_.rows() / 2; }
  const Matrix<S>& gram() const { return gram_; }

  S form(const Matrix<S>& x, const Matrix<S>& y) const { return (x.transpose() * gram_ * y)(0, 0); }

  /// Matrix of pairings Ω(x_a, y_b) between the columns of X and Y.
  Matrix<S> pairing(const Matrix<S>& x, const Matrix<S>& y) const { return x.transpose() * gram_ * y; }

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) { return a.gram_ == b.gram_; }

 private:
  Matrix<S> gram_;
};

/// Ordered basis e_1..e_n, f_1..f_n with Ω(e_i, f_j) = δ_ij.
template <class S>
SymplecticSpace<S> std_space(std::size_t n, FieldTag field) {
  Matrix<S> g(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = g.scalar(1);
    g(n + i, i) = g.scalar(-1);
  }
  SymplecticSpace<S> v(std::move(g));
  return v;
}

template <class S>
Subspace<S> perp(const SymplecticSpace<S>& v, const Subspace<S>& u) {
  require(u.ambient_dim() == v.dim(), ErrorCode::DimensionMismatch, "perp: ambient mismatch");
  return kernel(u.basis().transpose() * v.gram());
}

template <class S>
bool is_isotropic(const SymplecticSpace<S>& v, const Subspace<S>& u) {
  require(u.ambient_dim() == v.dim(), ErrorCode::DimensionMismatch, "ambient mismatch");
  return v.pairing(u.basis(), u.basis()).is_zero();
}

template <class S>
bool is_lagrangian(const SymplecticSpace<S>& v, const Subspace<S>& u) {
  bool result = is_isotropic(v, u) && 2 * u.dim() == v.dim();
  assert(result == (perp(v, u) == u));
  return result;
}

template <class S>
bool is_symplectic_map(const SymplecticSpace<S>& v, const Matrix<S>& g) {
  if (!g.is_square() || g.rows() != v.dim()) return false;
  return g.transpose() * v.gram() * g == v.gram();
}

/// φ: (F^k, G_from) -> (F^k, G_to) with φᵀ G_to φ = G_from.
template <class S>
bool is_symplectic_between(const SymplecticSpace<S>& from, const SymplecticSpace<S>& to, const Matrix<S>& phi) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) return false;
  return phi.transpose() * to.gram() * phi == from.gram();
}

template <class S>
bool in_sp_lie_algebra(const SymplecticSpace<S>& v, const Matrix<S>& x) {
  if (!x.is_square() || x.rows() != v.dim()) return false;
  return (x.transpose() * v.gram() + v.gram() * x).is_zero();
}

/// x ↦ x + c Ω(w, x) w
template <class S>
Matrix<S> transvection(const SymplecticSpace<S>& v, const Matrix<S>& w, const S& c) {
  Matrix<S> t = w * (w.transpose() * v.gram());
  t *= c;
  return Matrix<S>::identity(v.field(), v.dim()) + t;
}

/// Symplectic reduction U^⊥/U, realized through a section: the columns of
/// `section` span a complement of U inside U^⊥, and reduced coordinates are
/// coordinates along those columns.
template <class S>
class ReducedSpace {
 public:
  const SymplecticSpace<S>& parent() const { return parent_; }
  const Subspace<S>& core() const { return core_; }
  const Subspace<S>& core_perp() const { return core_perp_; }
  const Matrix<S>& section() const { return section_; }
  const SymplecticSpace<S>& reduced() const { return reduced_; }
  std::size_t dim() const { return reduced_.dim(); }

  template <class T>
  friend ReducedSpace<T> reduce(const SymplecticSpace<T>& v, const Subspace<T>& u);

 private:
  SymplecticSpace<S> parent_;
  Subspace<S> core_;
  Subspace<S> core_perp_;
  Matrix<S> section_;
  Matrix<S> frame_;  // [core basis | section]
  SymplecticSpace<S> reduced_;

  template <class T>
  friend Matrix<T> project(const ReducedSpace<T>& r, const Matrix<T>& v);
};

template <class S>
ReducedSpace<S> reduce(const SymplecticSpace<S>& v, const Subspace<S>& u) {
  require(is_isotropic(v, u), ErrorCode::Precondition, "reduce: subspace is not isotropic");
  ReducedSpace<S> r;
  r.parent_ = v;
  r.core_ = u;
  r.core_perp_ = perp(v, u);
  r.section_ = complement_in(u, r.core_perp_).basis();
  r.frame_ = hstack(u.basis(), r.section_);
  r.reduced_ = SymplecticSpace<S>(v.pairing(r.section_, r.section_));
  return r;
}

/// Reduced coordinates of the columns of v (each must lie in U^⊥).
template <class S>
Matrix<S> project(const ReducedSpace<S>& r, const Matrix<S>& v) {
  require(r.core_perp_.contains(v), ErrorCode::Precondition, "project: vector not in U-perp");
  auto coords = solve(r.frame_, v);
  require(coords.has_value(), ErrorCode::Internal, "project: frame does not span U-perp");
  return coords->block(r.core_.dim(), 0, r.section_.cols(), v.cols());
}

template <class S>
Matrix<S> lift(const ReducedSpace<S>& r, const Matrix<S>& c) {
  require(c.rows() == r.dim(), ErrorCode::DimensionMismatch, "lift: coordinate length mismatch");
  return r.section() * c;
}

/// (S)/U as a subspace of the reduced space, for U ⊆ S ⊆ U^⊥.
template <class S>
Subspace<S> push_subspace(const ReducedSpace<S>& r, const Subspace<S>& s) {
  require(s.contains(r.core()), ErrorCode::Precondition, "push_subspace: S does not contain U");
  return Subspace<S>::span(project(r, s.basis()));
}

/// Preimage of a reduced subspace: U + lift(T).
template <class S>
Subspace<S> pull_subspace(const ReducedSpace<S>& r, const Subspace<S>& t) {
  require(t.ambient_dim() == r.dim(), ErrorCode::DimensionMismatch, "pull_subspace: ambient mismatch");
  return Subspace<S>::span(hstack(r.core().basis(), lift(r, t.basis())));
}

/// Columns a_1..a_n, b_1..b_n with Ω(a_i, b_j) = δ_ij and Ω(a,a) = Ω(b,b) = 0.
template <class S>
Matrix<S> symplectic_basis(const SymplecticSpace<S>& v) {
  std::size_t n = v.half_dim();
  std::vector<Matrix<S>> rest;
  for (std::size_t k = 0; k < v.dim(); ++k) rest.push_back(unit_vector<S>(v.field(), v.dim(), k));
  Matrix<S> out(v.field(), v.dim(), v.dim());
  for (std::size_t k = 0; k < n; ++k) {
    // First remaining vector, paired with the first one it is not orthogonal to.
    std::size_t ia = 0;
    while (ia < rest.size() && rest[ia].is_zero()) ++ia;
    require(ia < rest.size(), ErrorCode::Internal, "symplectic_basis: ran out of vectors");
    Matrix<S> a = rest[ia];
    std::size_t ib = 0;
    while (ib < rest.size() && is_zero(v.form(a, rest[ib]))) ++ib;
    require(ib < rest.size(), ErrorCode::Internal, "symplectic_basis: degenerate remainder");
    Matrix<S> b = rest[ib] * (a.scalar(1) / v.form(a, rest[ib]));
    out.set_col(k, a);
    out.set_col(n + k, b);
    // Project the rest onto span(a, b)^⊥.
    for (auto& w : rest) {
      S wa = v.form(w, a);
      S wb = v.form(w, b);
      // w - Ω(w,b) a + Ω(w,a) b is orthogonal to a and b.
      w = w - a * wb + b * wa;
    }
  }
  return out;
}

/// Completes a partial symplectic basis. `a` holds n isotropic columns; the
/// entries of `b_known` that are set satisfy Ω(a_k, b_l) = δ_kl and are
/// mutually orthogonal. The missing b_l are solved for, then corrected so
/// the result is a full symplectic basis [a | b].
template <class S>
Matrix<S> extend_symplectic_basis(const SymplecticSpace<S>& v, const Matrix<S>& a,
                                  const std::vector<std::optional<Matrix<S>>>& b_known) {
  std::size_t n = v.half_dim();
  require(a.cols() == n && b_known.size() == n, ErrorCode::DimensionMismatch,
          "extend_symplectic_basis: wrong number of vectors");
  std::vector<std::size_t> missing;
  std::vector<Matrix<S>> b(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (b_known[l]) b[l] = *b_known[l];
    else missing.push_back(l);
  }
  if (missing.empty()) return hstack(a, Matrix<S>::from_columns(v.field(), v.dim(), b));

  // Rows: Ω(a_k, ·) for all k, then Ω(b_l, ·) for known l.
  std::vector<Matrix<S>> constraint_vectors;
  for (std::size_t k = 0; k < n; ++k) constraint_vectors.push_back(a.col(k));
  for (std::size_t l = 0; l < n; ++l)
    if (b_known[l]) constraint_vectors.push_back(b[l]);
  Matrix<S> lhs = Matrix<S>::from_columns(v.field(), v.dim(), constraint_vectors).transpose() * v.gram();
  Matrix<S> rhs(v.field(), lhs.rows(), missing.size());
  for (std::size_t c = 0; c < missing.size(); ++c) rhs(missing[c], c) = rhs.scalar(1);
  auto sol = solve(lhs, rhs);
  require(sol.has_value(), ErrorCode::Internal, "extend_symplectic_basis: inconsistent data");
  for (std::size_t c = 0; c < missing.size(); ++c) b[missing[c]] = sol->col(c);

  // b_l <- b_l - Σ_{q > l} Ω(b_l, b_q) a_q over missing pairs kills Ω(b_l, b_q).
  std::vector<Matrix<S>> fixed = b;
  for (std::size_t x = 0; x < missing.size(); ++x) {
    std::size_t l = missing[x];
    for (std::size_t y = x + 1; y < missing.size(); ++y) {
      std::size_t q = missing[y];
      fixed[l] -= a.col(q) * v.form(b[l], b[q]);
    }
  }
  Matrix<S> out = hstack(a, Matrix<S>::from_columns(v.field(), v.dim(), fixed));
  require(v.pairing(out, out) == std_space<S>(n, v.field()).gram(), ErrorCode::Internal,
          "extend_symplectic_basis: result is not a symplectic basis");
  return out;
}

}  // namespace lagorb
