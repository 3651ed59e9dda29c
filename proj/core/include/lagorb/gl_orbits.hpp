#pragma once

// GL(n) acting on the Lagrangian Grassmannian of W1 ⊕ W2 (W1 = span e,
// W2 = span f) by g ↦ diag(g, g^{-T}). Orbits are labeled by
// i = dim(U ∩ W1), j = dim(U ∩ W2) and the positive index k of the residual
// symmetric form, which has size d = n − i − j.

#include <cstddef>
#include <utility>

#include "lagorb/quadratic_forms.hpp"
#include "lagorb/symplectic.hpp"

namespace lagorb {

struct PolarizedSpace {
  std::size_t n = 0;
  SymplecticSpace<Rational> v;
  QSubspace w1;
  QSubspace w2;
  /// J e_i = −f_i, J f_i = e_i; Ω(x, y) = xᵀ J y.
  QMat j;
};

PolarizedSpace make_polarized_space(std::size_t n);

struct GlClass {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t d = 0;

  Signature signature() const { return {k, d - k}; }

  friend bool operator==(const GlClass&, const GlClass&) = default;
};

/// diag(g, (gᵀ)^{-1}); throws InvalidElement for singular g.
QMat gl_element(const PolarizedSpace& p, const QMat& g);

QSubspace gl_action(const PolarizedSpace& p, const QMat& g, const QSubspace& u);

/// φ_U : W1 → W2 with U = {(x, φ_U x)}; requires U ∩ W1 = U ∩ W2 = 0.
QMat graph_map(const PolarizedSpace& p, const QSubspace& u);

/// B(x, y) = (x, J φ_U y) on W1.
QMat hermitian_form(const PolarizedSpace& p, const QSubspace& u);

/// Invariant via reduction by U ∩ W2, then by the image of U ∩ W1.
GlClass classify(const PolarizedSpace& p, const QSubspace& u);

/// β(u, w) = Ω(P1 u, P2 w) restricted to the canonical complement of
/// (U ∩ W1) ⊕ (U ∩ W2) in U. Independent of the reduction pipeline.
QMat beta_form(const PolarizedSpace& p, const QSubspace& u);

/// span{e_1..e_i, f_{i+1}..f_{i+j}, e_a ± f_a}, with + for the first k
/// remaining indices.
QSubspace canonical_rep(const PolarizedSpace& p, std::size_t i, std::size_t j, std::size_t k);

/// g ∈ GL_n with gl_action(g, U) = U'. Throws NotSameOrbit when the
/// invariants differ and NoRationalWitness when the residual forms are
/// congruent over the reals but not over the rationals.
QMat witness(const PolarizedSpace& p, const QSubspace& u, const QSubspace& u_prime);

/// Nullity of {X ∈ gl_n : diag(X, −Xᵀ) U ⊆ U}.
std::size_t stab_dim(const PolarizedSpace& p, const QSubspace& u);

/// dim GL_i + dim GL_j + dim O(k, d−k) + dim N for the (i, j, d) block flag.
std::size_t expected_stab_dim(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// Σ_{i+j ≤ n} (n − i − j + 1)
std::size_t orbit_census_formula(std::size_t n);

}  // namespace lagorb
