#pragma once

// Orbits of Sp(V1) × Sp(V2) on the Lagrangian Grassmannian of V1 ⊕ V2 with
// Ω = Ω1 − Ω2. The orbit of U is determined by i = dim(U ∩ V1); U is
// recovered from (U ∩ V1, U ∩ V2) and a symplectic isomorphism φ between
// the two reduced spaces.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lagorb/symplectic.hpp"

namespace lagorb {

/// V = V1 ⊕ V2 with V1 = std_space(m), V2 = std_space(n), m ≤ n, and
/// coordinates [e_1..e_m, f_1..f_m | e'_1..e'_n, f'_1..f'_n].
template <class S>
struct SumSpace {
  std::size_t m = 0;
  std::size_t n = 0;
  /// Set when the caller asked for (m, n) with m > n; caller coordinates list
  /// the larger factor second and are permuted by normalize/denormalize.
  bool swapped = false;
  SymplecticSpace<S> v1;
  SymplecticSpace<S> v2;
  SymplecticSpace<S> v;

  const FieldTag& field() const { return v.field(); }
  std::size_t dim() const { return v.dim(); }

  Matrix<S> embed1(const Matrix<S>& x) const { return vstack(x, Matrix<S>(field(), 2 * n, x.cols())); }
  Matrix<S> embed2(const Matrix<S>& x) const { return vstack(Matrix<S>(field(), 2 * m, x.cols()), x); }
  Matrix<S> proj1(const Matrix<S>& x) const { return x.block(0, 0, 2 * m, x.cols()); }
  Matrix<S> proj2(const Matrix<S>& x) const { return x.block(2 * m, 0, 2 * n, x.cols()); }

  Subspace<S> factor1() const { return Subspace<S>::span(embed1(Matrix<S>::identity(field(), 2 * m))); }
  Subspace<S> factor2() const { return Subspace<S>::span(embed2(Matrix<S>::identity(field(), 2 * n))); }

  /// Caller coordinates -> internal coordinates.
  Subspace<S> normalize(const Subspace<S>& u) const { return swapped ? Subspace<S>::span(swap_blocks(u.basis(), 2 * n)) : u; }
  Subspace<S> denormalize(const Subspace<S>& u) const { return swapped ? Subspace<S>::span(swap_blocks(u.basis(), 2 * m)) : u; }

 private:
  // Moves the first `lead` rows after the remaining ones.
  Matrix<S> swap_blocks(const Matrix<S>& x, std::size_t lead) const {
    return vstack(x.block(lead, 0, x.rows() - lead, x.cols()), x.block(0, 0, lead, x.cols()));
  }
};

template <class S>
SumSpace<S> make_sum_space(std::size_t m, std::size_t n, FieldTag field) {
  SumSpace<S> s;
  s.swapped = m > n;
  if (s.swapped) std::swap(m, n);
  s.m = m;
  s.n = n;
  s.v1 = std_space<S>(m, field);
  s.v2 = std_space<S>(n, field);
  s.v = SymplecticSpace<S>(block_diag(s.v1.gram(), Matrix<S>(-s.v2.gram())));
  return s;
}

struct SpSpClass {
  std::size_t i = 0;
  std::size_t dim_u1 = 0;
  std::size_t dim_u2 = 0;

  friend bool operator==(const SpSpClass&, const SpSpClass&) = default;
};

/// (U ∩ V1, U ∩ V2, φ) with φ in the coordinates of the reduction sections.
template <class S>
struct GraphData {
  Subspace<S> u1;  // in V1 coordinates
  Subspace<S> u2;  // in V2 coordinates
  Matrix<S> phi;   // reduced V1 coordinates -> reduced V2 coordinates
};

template <class S>
struct SpSpWitness {
  Matrix<S> g1;
  Matrix<S> g2;
};

template <class S>
void require_lagrangian(const SumSpace<S>& s, const Subspace<S>& u) {
  require(u.ambient_dim() == s.dim(), ErrorCode::DimensionMismatch, "subspace has the wrong ambient dimension");
  require(is_lagrangian(s.v, u), ErrorCode::Precondition, "subspace is not Lagrangian");
}

template <class S>
std::pair<Subspace<S>, Subspace<S>> intersect_factors(const SumSpace<S>& s, const Subspace<S>& u) {
  require_lagrangian(s, u);
  Subspace<S> u1 = Subspace<S>::span(s.proj1(intersect(u, s.factor1()).basis()));
  Subspace<S> u2 = Subspace<S>::span(s.proj2(intersect(u, s.factor2()).basis()));
  // P1(U)^⊥ = U ∩ V1 inside V1, and likewise for V2.
  require(perp(s.v1, Subspace<S>::span(s.proj1(u.basis()))) == u1, ErrorCode::Internal,
          "perp identity failed for the first factor");
  require(perp(s.v2, Subspace<S>::span(s.proj2(u.basis()))) == u2, ErrorCode::Internal,
          "perp identity failed for the second factor");
  require(u2.dim() == u1.dim() + s.n - s.m, ErrorCode::Internal, "intersection dimension ladder failed");
  return {std::move(u1), std::move(u2)};
}

template <class S>
SpSpClass classify(const SumSpace<S>& s, const Subspace<S>& u) {
  auto [u1, u2] = intersect_factors(s, u);
  return {u1.dim(), u1.dim(), u2.dim()};
}

template <class S>
GraphData<S> graph_data(const SumSpace<S>& s, const Subspace<S>& u) {
  auto [u1, u2] = intersect_factors(s, u);
  ReducedSpace<S> r1 = reduce(s.v1, u1);
  ReducedSpace<S> r2 = reduce(s.v2, u2);
  // For each reduced basis vector c of V1: find (lift c, w) ∈ U, then φ(c) = [w].
  Matrix<S> lifts = lift(r1, Matrix<S>::identity(s.field(), r1.dim()));
  auto coeffs = solve(s.proj1(u.basis()), lifts);
  require(coeffs.has_value(), ErrorCode::Internal, "graph_data: lift not in P1(U)");
  Matrix<S> partners = s.proj2(u.basis()) * *coeffs;
  Matrix<S> phi = project(r2, partners);
  require(is_symplectic_between(r1.reduced(), r2.reduced(), phi), ErrorCode::Internal,
          "graph_data: reduced map is not symplectic");
  return {std::move(u1), std::move(u2), std::move(phi)};
}

template <class S>
Subspace<S> from_graph(const SumSpace<S>& s, const GraphData<S>& g) {
  require(g.u1.ambient_dim() == s.v1.dim() && g.u2.ambient_dim() == s.v2.dim(), ErrorCode::DimensionMismatch,
          "from_graph: factor subspaces have the wrong ambient dimension");
  if (!is_isotropic(s.v1, g.u1) || !is_isotropic(s.v2, g.u2) || g.u2.dim() != g.u1.dim() + s.n - s.m)
    fail(ErrorCode::InvalidGraph, "from_graph: factor subspaces are not an admissible pair");
  ReducedSpace<S> r1 = reduce(s.v1, g.u1);
  ReducedSpace<S> r2 = reduce(s.v2, g.u2);
  if (!is_symplectic_between(r1.reduced(), r2.reduced(), g.phi))
    fail(ErrorCode::InvalidGraph, "from_graph: phi is not a symplectic isomorphism");
  Matrix<S> eye = Matrix<S>::identity(s.field(), r1.dim());
  Matrix<S> graph = s.embed1(lift(r1, eye)) + s.embed2(lift(r2, g.phi));
  Matrix<S> gens = hstack(hstack(s.embed1(g.u1.basis()), s.embed2(g.u2.basis())), graph);
  Subspace<S> u = Subspace<S>::span(gens);
  require(is_lagrangian(s.v, u), ErrorCode::Internal, "from_graph: result is not Lagrangian");
  return u;
}

namespace detail {

// Generators of the canonical representative, with pair a = scaled_pair
// (if any) deformed to (e_a + t e'_a, t f_a + f'_a) (t f_a + f'_a spans the
// same line as f_a + t^{-1} f'_a when t != 0).
template <class S>
Matrix<S> canonical_generators(const SumSpace<S>& s, std::size_t i, std::optional<std::size_t> scaled_pair,
                               const S& t) {
  const std::size_t m = s.m, n = s.n;
  std::vector<Matrix<S>> cols;
  auto e1 = [&](std::size_t k) { return unit_vector<S>(s.field(), s.dim(), k); };
  auto f1 = [&](std::size_t k) { return unit_vector<S>(s.field(), s.dim(), m + k); };
  auto e2 = [&](std::size_t k) { return unit_vector<S>(s.field(), s.dim(), 2 * m + k); };
  auto f2 = [&](std::size_t k) { return unit_vector<S>(s.field(), s.dim(), 2 * m + n + k); };
  for (std::size_t k = 0; k < i; ++k) cols.push_back(e1(k));
  for (std::size_t k = 0; k < i; ++k) cols.push_back(e2(k));
  for (std::size_t k = m; k < n; ++k) cols.push_back(e2(k));
  for (std::size_t k = i; k < m; ++k) {
    if (scaled_pair && *scaled_pair == k) {
      cols.push_back(e1(k) + e2(k) * t);
      cols.push_back(f1(k) * t + f2(k));
    } else {
      cols.push_back(e1(k) + e2(k));
      cols.push_back(f1(k) + f2(k));
    }
  }
  return Matrix<S>::from_columns(s.field(), s.dim(), cols);
}

}  // namespace detail

/// U1 = span(e_1..e_i), U2 = span(e'_1..e'_i, e'_{m+1}..e'_n), and the
/// remaining pairs matched by index: e_a + e'_a, f_a + f'_a for a > i.
template <class S>
Subspace<S> canonical_rep(const SumSpace<S>& s, std::size_t i) {
  require(i <= s.m, ErrorCode::Range, "canonical_rep: i out of range");
  S one = scalar_traits<S>::from_int(1, s.field());
  return Subspace<S>::span(detail::canonical_generators(s, i, std::nullopt, one));
}

template <class S>
Subspace<S> act(const SumSpace<S>& s, const Matrix<S>& g1, const Matrix<S>& g2, const Subspace<S>& u) {
  if (!is_symplectic_map(s.v1, g1) || !is_symplectic_map(s.v2, g2))
    fail(ErrorCode::InvalidElement, "group element is not in Sp(V1) x Sp(V2)");
  return image(block_diag(g1, g2), u);
}

/// (g1, g2) ∈ Sp(V1) × Sp(V2) carrying canonical_rep(i) onto U.
template <class S>
SpSpWitness<S> adapted_frame(const SumSpace<S>& s, const Subspace<S>& u) {
  GraphData<S> gd = graph_data(s, u);
  const std::size_t i = gd.u1.dim();
  const std::size_t m = s.m, n = s.n, r = m - i;
  ReducedSpace<S> r1 = reduce(s.v1, gd.u1);
  ReducedSpace<S> r2 = reduce(s.v2, gd.u2);
  Matrix<S> sb = symplectic_basis(r1.reduced());
  Matrix<S> lifted1 = lift(r1, sb);
  Matrix<S> lifted2 = lift(r2, Matrix<S>(gd.phi * sb));

  Matrix<S> a1(s.field(), 2 * m, m);
  std::vector<std::optional<Matrix<S>>> b1(m);
  for (std::size_t k = 0; k < i; ++k) a1.set_col(k, gd.u1.basis().col(k));
  for (std::size_t k = 0; k < r; ++k) {
    a1.set_col(i + k, lifted1.col(k));
    b1[i + k] = lifted1.col(r + k);
  }
  Matrix<S> g1 = extend_symplectic_basis(s.v1, a1, b1);

  Matrix<S> a2(s.field(), 2 * n, n);
  std::vector<std::optional<Matrix<S>>> b2(n);
  for (std::size_t k = 0; k < i; ++k) a2.set_col(k, gd.u2.basis().col(k));
  for (std::size_t k = 0; k < r; ++k) {
    a2.set_col(i + k, lifted2.col(k));
    b2[i + k] = lifted2.col(r + k);
  }
  for (std::size_t k = i; k < gd.u2.dim(); ++k) a2.set_col(m + (k - i), gd.u2.basis().col(k));
  Matrix<S> g2 = extend_symplectic_basis(s.v2, a2, b2);

  require(act(s, g1, g2, canonical_rep(s, i)) == u, ErrorCode::Internal, "adapted_frame: verification failed");
  return {std::move(g1), std::move(g2)};
}

/// (g1, g2) with (g1 ⊕ g2) U = U'. The result is verified by direct action.
template <class S>
SpSpWitness<S> witness(const SumSpace<S>& s, const Subspace<S>& u, const Subspace<S>& u_prime) {
  if (!(classify(s, u) == classify(s, u_prime))) fail(ErrorCode::NotSameOrbit, "orbit invariants differ");
  SpSpWitness<S> from = adapted_frame(s, u);
  SpSpWitness<S> to = adapted_frame(s, u_prime);
  SpSpWitness<S> w{to.g1 * inverse(from.g1), to.g2 * inverse(from.g2)};
  require(act(s, w.g1, w.g2, u) == u_prime, ErrorCode::Internal, "witness: verification failed");
  return w;
}

/// Dimension of {(X1, X2) ∈ sp(V1) × sp(V2) : (X1 ⊕ X2) U ⊆ U}, computed as the
/// nullity of the full linear system in the entries of X1 and X2.
template <class S>
std::size_t stab_dim(const SumSpace<S>& s, const Subspace<S>& u) {
  require_lagrangian(s, u);
  const std::size_t d1 = s.v1.dim(), d2 = s.v2.dim();
  const std::size_t unknowns = d1 * d1 + d2 * d2;
  Matrix<S> ann = annihilator(u);
  const std::size_t rows = d1 * d1 + d2 * d2 + ann.rows() * u.dim();
  Matrix<S> system(s.field(), rows, unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) {
    Matrix<S> x1(s.field(), d1, d1), x2(s.field(), d2, d2);
    if (col < d1 * d1) x1(col / d1, col % d1) = x1.scalar(1);
    else x2((col - d1 * d1) / d2, (col - d1 * d1) % d2) = x2.scalar(1);
    Matrix<S> lie1 = x1.transpose() * s.v1.gram() + s.v1.gram() * x1;
    Matrix<S> lie2 = x2.transpose() * s.v2.gram() + s.v2.gram() * x2;
    Matrix<S> moved = ann * block_diag(x1, x2) * u.basis();
    std::size_t row = 0;
    for (const auto& block : {lie1, lie2, moved})
      for (const S& x : block.entries()) system(row++, col) = x;
  }
  return unknowns - rank(system);
}

inline void require_spsp_range(std::size_t m, std::size_t n, std::size_t i) {
  require(i <= m && m <= n, ErrorCode::Range, "need 0 <= i <= m <= n");
}

/// Dimension of GL_i × GL_{n-m+i} × Sp_{2m-2i} × N_{i,2m-2i} × N_{n-m+i,2m-2i}.
inline std::size_t expected_stab_dim(std::size_t m, std::size_t n, std::size_t i) {
  require_spsp_range(m, n, i);
  const std::size_t a = i, b = n - m + i, c = m - i;
  const std::size_t reductive = a * a + b * b + c * (2 * c + 1);
  const std::size_t nil1 = a * (2 * c) + a * (a + 1) / 2;
  const std::size_t nil2 = b * (2 * c) + b * (b + 1) / 2;
  return reductive + nil1 + nil2;
}

inline std::size_t expected_orbit_dim(std::size_t m, std::size_t n, std::size_t i) {
  return m * (2 * m + 1) + n * (2 * n + 1) - expected_stab_dim(m, n, i);
}

/// (n+m+1)(n+m)/2 − i² − ni + mi
inline std::size_t closed_form_orbit_dim(std::size_t m, std::size_t n, std::size_t i) {
  require_spsp_range(m, n, i);
  return (n + m + 1) * (n + m) / 2 + m * i - i * i - n * i;
}

template <class S>
struct ClosureCurve {
  std::vector<std::pair<S, Subspace<S>>> points;
  Subspace<S> limit;
};

/// t = 1, 1/2, ..., 2^-10
std::vector<Rational> default_curve_parameters();

/// A curve U(t) ⊂ L_i (t != 0) whose limit U(0) lies in L_{i+1}: one
/// hyperbolic pair of the canonical graph is rescaled, e ↦ t e', f ↦ t^-1 f'.
template <class S>
ClosureCurve<S> closure_curve(const SumSpace<S>& s, std::size_t i, const std::vector<S>& ts) {
  require(i <= s.m, ErrorCode::Range, "closure_curve: i out of range");
  if (i == s.m) fail(ErrorCode::NoDeeperStratum, "closure_curve: L_m is the closed stratum");
  ClosureCurve<S> out;
  for (const S& t : ts) {
    require(!is_zero(t), ErrorCode::Range, "closure_curve: parameter must be nonzero");
    out.points.emplace_back(t, Subspace<S>::span(detail::canonical_generators(s, i, i, t)));
  }
  out.limit = Subspace<S>::span(detail::canonical_generators(s, i, i, scalar_traits<S>::from_int(0, s.field())));
  return out;
}

}  // namespace lagorb
