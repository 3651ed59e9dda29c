#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lagorb/field.hpp"

namespace lagorb::nt {

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n);

/// The squarefree integer s with n = s * k^2, sign(s) = sign(n).
mpz_class squarefree_part(const mpz_class& n);

/// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Some t with t^2 ≡ a (mod m) for squarefree m >= 1.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& m);

/// Nontrivial rational (x, y, z) with a x^2 + b y^2 = z^2, for squarefree
/// nonzero integers a, b. Returns nullopt exactly when none exists.
std::optional<std::array<Rational, 3>> solve_legendre(const mpz_class& a, const mpz_class& b);

/// Hilbert symbol (a, b)_p ∈ {1, −1} for nonzero integers a, b and a prime p.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

}  // namespace lagorb::nt
