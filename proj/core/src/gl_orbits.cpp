#include "lagorb/gl_orbits.hpp"

#include <cassert>
#include <vector>

namespace lagorb {
namespace {

const FieldTag kQ = FieldTag::rationals();

void require_lagrangian(const PolarizedSpace& p, const QSubspace& u) {
  require(u.ambient_dim() == p.v.dim(), ErrorCode::DimensionMismatch, "subspace has the wrong ambient dimension");
  require(is_lagrangian(p.v, u), ErrorCode::Precondition, "subspace is not Lagrangian");
}

QMat top(const QMat& x, std::size_t n) { return x.block(0, 0, n, x.cols()); }
QMat bottom(const QMat& x, std::size_t n) { return x.block(n, 0, n, x.cols()); }

/// Form Ω(x, φ x') on X1 for a Lagrangian `u` transverse to both halves of
/// the polarization (x1, x2) of `space`.
QMat transverse_form(const SymplecticSpace<Rational>& space, const QSubspace& x1, const QSubspace& x2,
                     const QSubspace& u) {
  require(intersect(u, x1).dim() == 0 && intersect(u, x2).dim() == 0, ErrorCode::Internal,
          "residual Lagrangian is not transverse to the polarization");
  // x = u_part - y with u_part ∈ U, y ∈ X2, so φ(x) = y.
  auto coeffs = solve(hstack(u.basis(), x2.basis()), x1.basis());
  require(coeffs.has_value(), ErrorCode::Internal, "polarization does not span the residual space");
  QMat phi_x = -(x2.basis() * coeffs->block(u.dim(), 0, x2.dim(), x1.dim()));
  QMat b = space.pairing(x1.basis(), phi_x);
  require(b.is_symmetric(), ErrorCode::Internal, "residual form is not symmetric");
  return b;
}

struct LayoutFrame {
  QMat basis;     // columns p_1..p_n of the aligning GL element
  QMat residual;  // graph map of the residual block after alignment
};

// P with P e_k spanning U ∩ W1 for k < i and P^{-T} f_k spanning U ∩ W2 for
// i ≤ k < i+j. After P^{-1}, U splits as span(e_<i, f_[i,i+j)) ⊕ graph(residual).
LayoutFrame layout_frame(const PolarizedSpace& p, const QSubspace& u, const GlClass& cls) {
  const std::size_t n = p.n;
  QSubspace u1e = QSubspace::span(top(intersect(u, p.w1).basis(), n));
  QSubspace u2f = QSubspace::span(bottom(intersect(u, p.w2).basis(), n));
  QSubspace ann_u2 = kernel(u2f.basis().transpose());
  QSubspace full = QSubspace::full(kQ, n);
  QMat frame = hstack(hstack(u1e.basis(), complement_in(ann_u2, full).basis()), complement_in(u1e, ann_u2).basis());
  require(frame.cols() == n, ErrorCode::Internal, "layout_frame: wrong number of columns");

  QSubspace aligned = gl_action(p, inverse(frame), u);
  const std::size_t start = cls.i + cls.j;
  QMat coord(kQ, 2 * n, 2 * cls.d);
  for (std::size_t a = 0; a < cls.d; ++a) {
    coord(start + a, a) = 1;
    coord(n + start + a, cls.d + a) = 1;
  }
  QSubspace residual = intersect(aligned, QSubspace::span(coord));
  require(residual.dim() == cls.d, ErrorCode::Internal, "layout_frame: residual block has the wrong size");
  QMat xs = residual.basis().block(start, 0, cls.d, cls.d);
  QMat ys = residual.basis().block(n + start, 0, cls.d, cls.d);
  return {frame, ys * inverse(xs)};
}

}  // namespace

PolarizedSpace make_polarized_space(std::size_t n) {
  PolarizedSpace p;
  p.n = n;
  p.v = std_space<Rational>(n, kQ);
  QMat eye = QMat::identity(kQ, 2 * n);
  p.w1 = QSubspace::span(eye.block(0, 0, 2 * n, n));
  p.w2 = QSubspace::span(eye.block(0, n, 2 * n, n));
  p.j = QMat(kQ, 2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    p.j(n + a, a) = -1;  // J e_a = -f_a
    p.j(a, n + a) = 1;   // J f_a = e_a
  }
  require(p.j == p.v.gram(), ErrorCode::Internal, "J does not represent the symplectic form");
  if (n > 0) {
    // g* = g^{-T} must preserve Ω.
    QMat g = QMat::identity(kQ, n);
    g(0, n - 1) += 1;
    g(0, 0) = 2;
    require(is_symplectic_map(p.v, gl_element(p, g)), ErrorCode::Internal, "g^{-T} convention broken");
  }
  return p;
}

QMat gl_element(const PolarizedSpace& p, const QMat& g) {
  require(g.rows() == p.n && g.cols() == p.n, ErrorCode::InvalidElement, "GL element has the wrong size");
  if (!is_invertible(g)) fail(ErrorCode::InvalidElement, "GL element is singular");
  return block_diag(g, inverse(g).transpose());
}

QSubspace gl_action(const PolarizedSpace& p, const QMat& g, const QSubspace& u) {
  require_lagrangian(p, u);
  return image(gl_element(p, g), u);
}

QMat graph_map(const PolarizedSpace& p, const QSubspace& u) {
  require_lagrangian(p, u);
  if (intersect(u, p.w1).dim() != 0 || intersect(u, p.w2).dim() != 0)
    fail(ErrorCode::NotInL00, "subspace meets W1 or W2 nontrivially");
  return bottom(u.basis(), p.n) * inverse(top(u.basis(), p.n));
}

QMat hermitian_form(const PolarizedSpace& p, const QSubspace& u) {
  QMat phi = graph_map(p, u);
  QMat eye = QMat::identity(kQ, 2 * p.n);
  QMat into_w1 = eye.block(0, 0, 2 * p.n, p.n);
  QMat into_w2 = eye.block(0, p.n, 2 * p.n, p.n);
  QMat b = into_w1.transpose() * p.j * into_w2 * phi;
  require(b.is_symmetric(), ErrorCode::Internal, "hermitian form is not symmetric");
  return b;
}

GlClass classify(const PolarizedSpace& p, const QSubspace& u) {
  require_lagrangian(p, u);
  const std::size_t n = p.n;
  QSubspace u1 = intersect(u, p.w1);
  QSubspace u2 = intersect(u, p.w2);
  GlClass cls{u1.dim(), u2.dim(), 0, n - u1.dim() - u2.dim()};

  // First reduction: by U2.
  ReducedSpace<Rational> r2 = reduce(p.v, u2);
  QSubspace u_r2 = push_subspace(r2, u);
  QSubspace w2_r2 = push_subspace(r2, p.w2);
  QSubspace w1_r2 = push_subspace(r2, subspace_sum(intersect(p.w1, r2.core_perp()), u2));

  // Second reduction: by the image of U1.
  QSubspace t = push_subspace(r2, subspace_sum(u1, u2));
  ReducedSpace<Rational> r12 = reduce(r2.reduced(), t);
  QSubspace t_perp = r12.core_perp();
  QSubspace residual_u = push_subspace(r12, u_r2);
  QSubspace x1 = push_subspace(r12, subspace_sum(intersect(w1_r2, t_perp), t));
  QSubspace x2 = push_subspace(r12, subspace_sum(intersect(w2_r2, t_perp), t));
  require(residual_u.dim() == cls.d && x1.dim() == cls.d && x2.dim() == cls.d, ErrorCode::Internal,
          "classify: residual dimensions are inconsistent");

  Signature sig = signature(transverse_form(r12.reduced(), x1, x2, residual_u));
  require(sig.positive + sig.negative == cls.d, ErrorCode::Internal, "classify: residual form is degenerate");
  cls.k = sig.positive;
  assert(signature(beta_form(p, u)) == cls.signature());
  return cls;
}

QMat beta_form(const PolarizedSpace& p, const QSubspace& u) {
  require_lagrangian(p, u);
  const std::size_t n = p.n;
  QSubspace radical = subspace_sum(intersect(u, p.w1), intersect(u, p.w2));
  QMat c = complement_in(radical, u).basis();
  QMat p1 = c, p2 = c;
  for (std::size_t col = 0; col < c.cols(); ++col)
    for (std::size_t a = 0; a < n; ++a) {
      p1(n + a, col) = 0;
      p2(a, col) = 0;
    }
  QMat b = p.v.pairing(p1, p2);
  require(b.is_symmetric(), ErrorCode::Internal, "beta form is not symmetric");
  return b;
}

QSubspace canonical_rep(const PolarizedSpace& p, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = p.n;
  require(i + j <= n && k <= n - i - j, ErrorCode::Range, "canonical_rep: need i + j <= n and k <= n - i - j");
  QMat gens(kQ, 2 * n, n);
  for (std::size_t a = 0; a < i; ++a) gens(a, a) = 1;
  for (std::size_t a = i; a < i + j; ++a) gens(n + a, a) = 1;
  for (std::size_t a = i + j; a < n; ++a) {
    gens(a, a) = 1;
    gens(n + a, a) = a - (i + j) < k ? 1 : -1;
  }
  QSubspace u = QSubspace::span(gens);
  require(is_lagrangian(p.v, u), ErrorCode::Internal, "canonical_rep: not Lagrangian");
  return u;
}

QMat witness(const PolarizedSpace& p, const QSubspace& u, const QSubspace& u_prime) {
  GlClass cls = classify(p, u);
  if (!(cls == classify(p, u_prime))) fail(ErrorCode::NotSameOrbit, "orbit invariants differ");
  LayoutFrame from = layout_frame(p, u, cls);
  LayoutFrame to = layout_frame(p, u_prime, cls);
  // h^{-T} φ h^{-1} = φ'  <=>  Cᵀ φ C = φ' with C = h^{-1}.
  QMat c = find_congruence(from.residual, to.residual);
  QMat middle = QMat::identity(kQ, p.n);
  middle.set_block(cls.i + cls.j, cls.i + cls.j, inverse(c));
  QMat g = to.basis * middle * inverse(from.basis);
  require(gl_action(p, g, u) == u_prime, ErrorCode::Internal, "witness: verification failed");
  return g;
}

std::size_t stab_dim(const PolarizedSpace& p, const QSubspace& u) {
  require_lagrangian(p, u);
  const std::size_t n = p.n;
  QMat ann = annihilator(u);
  QMat system(kQ, ann.rows() * u.dim(), n * n);
  for (std::size_t col = 0; col < n * n; ++col) {
    QMat x(kQ, n, n);
    x(col / n, col % n) = 1;
    QMat moved = ann * block_diag(x, QMat(-x.transpose())) * u.basis();
    std::size_t row = 0;
    for (const Rational& v : moved.entries()) system(row++, col) = v;
  }
  return n * n - rank(system);
}

std::size_t expected_stab_dim(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  require(i + j <= n && k <= n - i - j, ErrorCode::Range, "expected_stab_dim: invalid class");
  const std::size_t d = n - i - j;
  return i * i + j * j + d * (d - 1) / 2 + i * j + (i + j) * d;
}

std::size_t orbit_census_formula(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) total += n - i - j + 1;
  return total;
}

}  // namespace lagorb
