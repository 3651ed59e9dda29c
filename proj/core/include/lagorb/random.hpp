#pragma once

#include <cstdint>
#include <random>

#include "lagorb/symplectic.hpp"

namespace lagorb {

/// Seeded generator. Draws are reduced from raw mt19937_64 output so the
/// stream is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Vector with entries drawn from [-bound, bound], never zero.
template <class S>
Matrix<S> random_nonzero_vector(Rng& rng, FieldTag field, std::size_t n, std::int64_t bound) {
  Matrix<S> v(field, n, 1);
  do {
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = v.scalar(rng.uniform(-bound, bound));
  } while (v.is_zero());
  return v;
}

/// Product of `length` transvections with small random directions. Exact and
/// symplectic by construction.
template <class S>
Matrix<S> random_symplectic(const SymplecticSpace<S>& v, Rng& rng, std::size_t length = 4) {
  Matrix<S> g = Matrix<S>::identity(v.field(), v.dim());
  if (v.dim() == 0) return g;
  for (std::size_t k = 0; k < length; ++k) {
    // Sparse directions keep entry growth modest.
    Matrix<S> w(v.field(), v.dim(), 1);
    do {
      for (std::size_t i = 0; i < v.dim(); ++i)
        w(i, 0) = rng.uniform(0, 2) == 0 ? w.scalar(rng.uniform(-2, 2)) : w.scalar(0);
    } while (w.is_zero());
    std::int64_t c = rng.uniform(1, 2) * (rng.coin() ? 1 : -1);
    g = transvection(v, w, w.scalar(c)) * g;
  }
  return g;
}

/// Random invertible n×n matrix: elementary shears, sign/scale changes and
/// swaps applied to the identity.
template <class S>
Matrix<S> random_invertible(FieldTag field, std::size_t n, Rng& rng, std::size_t length = 6) {
  Matrix<S> g = Matrix<S>::identity(field, n);
  if (n == 0) return g;
  for (std::size_t k = 0; k < length; ++k) {
    auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto c = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    int kind = static_cast<int>(rng.uniform(0, 3));
    if (r != c && kind <= 1) {
      S s = g.scalar(rng.uniform(1, 2) * (rng.coin() ? 1 : -1));
      for (std::size_t j = 0; j < n; ++j) g(r, j) += s * g(c, j);
    } else if (r != c && kind == 2) {
      for (std::size_t j = 0; j < n; ++j) std::swap(g(r, j), g(c, j));
    } else {
      std::int64_t s = rng.coin() ? -1 : 2;
      if (field.is_rational() || s % static_cast<std::int64_t>(field.p) != 0)
        for (std::size_t j = 0; j < n; ++j) g(r, j) *= g.scalar(s);
    }
  }
  return g;
}

}  // namespace lagorb
