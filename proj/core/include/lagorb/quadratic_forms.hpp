#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lagorb/matrix.hpp"

namespace lagorb {

/// Inertia indices (p, q) of a real symmetric form.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Cᵀ B C = diag(diagonal) with C invertible.
struct CongruenceDiagonalization {
  QMat transform;
  std::vector<Rational> diagonal;
};

CongruenceDiagonalization diagonalize_congruence(const QMat& b);

Signature signature(const QMat& b);

/// Rational (x, y) with a1 x^2 + a2 y^2 = target, a1 a2 != 0.
std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& a1, const Rational& a2,
                                                              const Rational& target);

/// Rational v with Σ a_k v_k^2 = target (all a_k nonzero), or nullopt if the
/// search fails. Exact for one or two variables; for three or more, all but
/// two coordinates are searched over small rationals.
std::optional<std::vector<Rational>> represent(const std::vector<Rational>& diagonal, const Rational& target);

/// Hasse–Minkowski test: equal dimension, signature, discriminant and Hasse
/// invariants at every prime.
bool rationally_congruent(const QMat& a, const QMat& b);

/// Invertible rational C with Cᵀ from C = to. Throws NotSameOrbit when the
/// real signatures differ, NoRationalWitness when the forms are not
/// congruent over the rationals, and TooLarge if the bounded search for a
/// congruence gives up on forms that are congruent.
QMat find_congruence(const QMat& from, const QMat& to);

}  // namespace lagorb
