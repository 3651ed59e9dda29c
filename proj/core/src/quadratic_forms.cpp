#include "lagorb/quadratic_forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lagorb/linalg.hpp"
#include "lagorb/number_theory.hpp"

namespace lagorb {
namespace {

// α = A r^2 with A a squarefree integer.
std::pair<mpz_class, Rational> split_square(const Rational& alpha) {
  mpz_class num_den = alpha.get_num() * alpha.get_den();
  mpz_class a = nt::squarefree_part(num_den);
  mpz_class k = sqrt(mpz_class(num_den / a));
  Rational r(k, alpha.get_den());
  r.canonicalize();
  return {a, r};
}

// Coefficients recur across many representation attempts; factoring them
// once matters when they are large.
std::pair<mpz_class, Rational> split_square_cached(const Rational& alpha) {
  thread_local std::map<std::pair<mpz_class, mpz_class>, std::pair<mpz_class, Rational>> cache;
  auto key = std::make_pair(alpha.get_num(), alpha.get_den());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() > 4096) cache.clear();
  auto out = split_square(alpha);
  cache.emplace(std::move(key), out);
  return out;
}

// Square class of x y from those of x = A r^2 and y = B t^2.
std::pair<mpz_class, Rational> split_product(const std::pair<mpz_class, Rational>& x,
                                             const std::pair<mpz_class, Rational>& y) {
  mpz_class g = gcd(x.first, y.first);
  return {mpz_class((x.first / g) * (y.first / g)), Rational(x.second * y.second * Rational(g))};
}

// Solution of Σ a_k v_k^2 = target supported on a head pair (i, j), or on
// the single index i when i == j, plus nonzero tail entries. Adding the tail
// one entry at a time never passes through a zero partial value.
struct Representation {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational x;
  Rational y;
  std::vector<std::pair<std::size_t, Rational>> tail;
};

// Tail tuples in [0, radius]^size ordered by max-norm.
std::vector<std::vector<long>> tail_candidates(std::size_t size) {
  const long max_radius = size == 0 ? 0 : size == 1 ? 48 : size == 2 ? 12 : size == 3 ? 5 : 3;
  std::vector<std::vector<long>> out;
  if (size == 0) return {{}};
  for (long radius = 0; radius <= max_radius; ++radius) {
    std::vector<long> cur(size, 0);
    while (true) {
      if (*std::max_element(cur.begin(), cur.end()) == radius) out.push_back(cur);
      std::size_t pos = 0;
      while (pos < size && cur[pos] == radius) cur[pos++] = 0;
      if (pos == size) break;
      ++cur[pos];
    }
  }
  return out;
}

// Binary representation attempts allowed for one congruence search.
constexpr std::size_t kSearchBudget = 6000;
constexpr std::size_t kMaxDenominatorProducts = 64;

std::optional<Representation> find_representation(const std::vector<Rational>& a, const Rational& target,
                                                  std::size_t& budget) {
  const std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i)
    if (auto x = nt::rational_sqrt(Rational(target / a[i]))) return Representation{i, i, *x, 0, {}};
  if (d < 2) return std::nullopt;

  // Local conditions can force the tail denominator to be divisible by
  // several of the primes where the form or the target is not a unit (for
  // <33, 77, 21> representing 1 it must be a multiple of 231). Try products
  // of those primes first, then small multiples of them.
  std::vector<mpz_class> dens{1};
  if (d > 2) {
    std::set<mpz_class> primes{2};
    auto collect = [&](const Rational& x) {
      for (const auto& [prime, e] : nt::factorize(mpz_class(x.get_num() * x.get_den()))) primes.insert(prime);
    };
    for (const Rational& x : a) collect(x);
    collect(target);
    std::vector<mpz_class> products{1};
    for (const mpz_class& prime : primes) {
      if (products.size() >= kMaxDenominatorProducts) break;
      for (std::size_t k = 0, size = products.size(); k < size; ++k) products.push_back(products[k] * prime);
    }
    std::sort(products.begin(), products.end());
    std::set<mpz_class> seen{1};
    for (long scale = 1; scale <= 4; ++scale)
      for (const mpz_class& s : products)
        if (seen.insert(s * scale).second) dens.push_back(s * scale);
  }
  const auto candidates = tail_candidates(d - 2);
  for (const mpz_class& den : dens) {
    for (const auto& cand : candidates) {
      std::vector<Rational> zs;
      bool fresh = den == 1;
      for (long c : cand) {
        zs.emplace_back(mpz_class(c), den);
        zs.back().canonicalize();
        if (zs.back().get_den() == den) fresh = true;
      }
      if (!fresh) continue;  // already tried with a smaller denominator
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          std::vector<std::pair<std::size_t, Rational>> tail;
          Rational rest = target;
          std::size_t slot = 0;
          for (std::size_t k = 0; k < d; ++k) {
            if (k == i || k == j) continue;
            const Rational& z = zs[slot++];
            if (sgn(z) == 0) continue;
            tail.emplace_back(k, z);
            rest -= a[k] * z * z;
          }
          if (sgn(rest) == 0) continue;
          bool passes_zero = false;
          Rational partial = rest;
          for (std::size_t t = 0; t + 1 < tail.size(); ++t) {
            partial += a[tail[t].first] * tail[t].second * tail[t].second;
            if (sgn(partial) == 0) passes_zero = true;
          }
          if (passes_zero) continue;
          if (budget == 0) return std::nullopt;
          --budget;
          std::optional<std::pair<Rational, Rational>> head;
          try {
            head = represent_binary(a[i], a[j], rest);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::TooLarge) throw;
            continue;  // a factorization gave up; try the next candidate
          }
          if (!head) continue;
          return Representation{i, j, head->first, head->second, std::move(tail)};
        }
    }
  }
  return std::nullopt;
}

// Columns of `vectors` are pairwise orthogonal with Q(col_k) = values[k].
struct DiagonalBasis {
  std::vector<QMat> vectors;
  std::vector<Rational> values;

  // Rescale so the value is a squarefree integer; keeps later numbers small.
  void push(QMat v, const Rational& value) {
    auto [a, r] = split_square(value);
    v *= Rational(1) / r;
    vectors.push_back(std::move(v));
    values.emplace_back(a);
  }
};

// Splits off a vector of value `target`; the remainder is again diagonal and
// is built explicitly from the representation, so no new diagonalization (and
// no coefficient blow-up) is needed.
std::pair<QMat, DiagonalBasis> split_off(const DiagonalBasis& b, const Representation& found, const Rational& target) {
  const Representation* rep = &found;
  DiagonalBasis rest;
  std::vector<bool> used(b.values.size(), false);
  used[rep->i] = used[rep->j] = true;
  for (const auto& [k, z] : rep->tail) used[k] = true;
  for (std::size_t k = 0; k < b.values.size(); ++k)
    if (!used[k]) rest.push(b.vectors[k], b.values[k]);
  if (rep->i == rep->j) return {b.vectors[rep->i] * rep->x, std::move(rest)};

  const Rational &ai = b.values[rep->i], &aj = b.values[rep->j];
  QMat u = b.vectors[rep->i] * rep->x + b.vectors[rep->j] * rep->y;
  Rational r = ai * rep->x * rep->x + aj * rep->y * rep->y;
  rest.push(b.vectors[rep->i] * Rational(aj * rep->y) - b.vectors[rep->j] * Rational(ai * rep->x), ai * aj * r);
  for (const auto& [k, z] : rep->tail) {
    const Rational& ak = b.values[k];
    Rational next = r + ak * z * z;
    rest.push(u * Rational(ak * z) - b.vectors[k] * r, ak * r * next);
    u += b.vectors[k] * z;
    r = next;
  }
  require(r == target, ErrorCode::Internal, "split_off: represented value mismatch");
  return {std::move(u), std::move(rest)};
}

}  // namespace

CongruenceDiagonalization diagonalize_congruence(const QMat& b) {
  require(b.is_symmetric(), ErrorCode::Shape, "congruence diagonalization needs a symmetric matrix");
  std::size_t n = b.rows();
  QMat a = b;
  QMat c = QMat::identity(b.field(), n);
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t t = 0; t < n; ++t) std::swap(a(x, t), a(y, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(a(t, x), a(t, y));
    for (std::size_t t = 0; t < n; ++t) std::swap(c(t, x), c(t, y));
  };
  // col_x += s col_y and row_x += s row_y
  auto add_index = [&](std::size_t x, std::size_t y, const Rational& s) {
    for (std::size_t t = 0; t < n; ++t) a(t, x) += s * a(t, y);
    for (std::size_t t = 0; t < n; ++t) a(x, t) += s * a(y, t);
    for (std::size_t t = 0; t < n; ++t) c(t, x) += s * c(t, y);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t l = k + 1;
      while (l < n && sgn(a(l, l)) == 0) ++l;
      if (l < n) {
        swap_index(k, l);
      } else {
        // Zero diagonal from k on: a(k,k) + 2 a(k,l) + a(l,l) = 2 a(k,l).
        l = k + 1;
        while (l < n && sgn(a(k, l)) == 0) ++l;
        if (l == n) continue;
        add_index(k, l, Rational(1));
      }
    }
    for (std::size_t l = k + 1; l < n; ++l) {
      if (sgn(a(k, l)) == 0) continue;
      Rational factor = -a(k, l) / a(k, k);
      add_index(l, k, factor);
    }
  }
  CongruenceDiagonalization out{c, {}};
  for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(a(k, k));
  return out;
}

Signature signature(const QMat& b) {
  Signature s;
  for (const Rational& d : diagonalize_congruence(b).diagonal) {
    if (sgn(d) > 0) ++s.positive;
    else if (sgn(d) < 0) ++s.negative;
  }
  return s;
}

std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& a1, const Rational& a2,
                                                              const Rational& target) {
  require(sgn(a1) != 0 && sgn(a2) != 0 && sgn(target) != 0, ErrorCode::Precondition,
          "represent_binary: zero coefficient");
  Rational alpha = a1 / target;
  Rational beta = a2 / target;
  // 1/target = T (1 / (T s))^2 when target = T s^2.
  auto [tt, ts] = split_square(target);
  std::pair<mpz_class, Rational> inv_target{tt, Rational(1) / (Rational(tt) * ts)};
  auto [big_a, r] = split_product(split_square_cached(a1), inv_target);
  auto [big_b, t] = split_product(split_square_cached(a2), inv_target);
  auto sol = nt::solve_legendre(big_a, big_b);
  if (!sol) return std::nullopt;
  auto [x_big, y_big, z_big] = *sol;
  if (sgn(z_big) != 0) return std::pair<Rational, Rational>{x_big / (r * z_big), y_big / (t * z_big)};
  // α x0^2 + β y0^2 = 0: the form is a hyperbolic plane and represents everything.
  Rational x0 = x_big / r;
  Rational y0 = y_big / t;
  Rational wx = 1, wy = 0;
  if (sgn(alpha * x0) == 0) {
    wx = 0;
    wy = 1;
  }
  Rational cross = alpha * x0 * wx + beta * y0 * wy;
  Rational qw = alpha * wx * wx + beta * wy * wy;
  Rational s = (Rational(1) - qw) / (Rational(2) * cross);
  return std::pair<Rational, Rational>{s * x0 + wx, s * y0 + wy};
}

std::optional<std::vector<Rational>> represent(const std::vector<Rational>& diagonal, const Rational& target) {
  require(sgn(target) != 0, ErrorCode::Precondition, "represent: zero target");
  for (const Rational& a : diagonal) require(sgn(a) != 0, ErrorCode::Precondition, "represent: zero coefficient");
  std::size_t budget = kSearchBudget;
  auto rep = find_representation(diagonal, target, budget);
  if (!rep) return std::nullopt;
  std::vector<Rational> out(diagonal.size(), Rational(0));
  out[rep->i] = rep->x;
  if (rep->j != rep->i) out[rep->j] = rep->y;
  for (const auto& [k, z] : rep->tail) out[k] = z;
  return out;
}

bool rationally_congruent(const QMat& a, const QMat& b) {
  require(a.is_symmetric() && b.is_symmetric(), ErrorCode::Shape, "rationally_congruent: forms must be symmetric");
  require(is_invertible(a) && is_invertible(b), ErrorCode::Precondition,
          "rationally_congruent: forms must be nondegenerate");
  if (a.rows() != b.rows() || !(signature(a) == signature(b))) return false;
  // Integer representatives of the square classes of the diagonal entries.
  auto classes = [](const QMat& m) {
    std::vector<mpz_class> out;
    for (const Rational& x : diagonalize_congruence(m).diagonal) out.push_back(nt::squarefree_part(mpz_class(x.get_num() * x.get_den())));
    return out;
  };
  std::vector<mpz_class> da = classes(a), db = classes(b);
  mpz_class disc_a = 1, disc_b = 1;
  for (const auto& x : da) disc_a *= x;
  for (const auto& x : db) disc_b *= x;
  if (nt::squarefree_part(disc_a) != nt::squarefree_part(disc_b)) return false;
  // Hasse invariants at 2 and every prime dividing an entry; all other finite
  // places see unit entries only and give +1 on both sides.
  std::set<mpz_class> primes{2};
  for (const auto* d : {&da, &db})
    for (const auto& x : *d)
      for (const auto& [prime, e] : nt::factorize(x)) primes.insert(prime);
  auto hasse = [](const std::vector<mpz_class>& d, const mpz_class& prime) {
    int h = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) h *= nt::hilbert_symbol(d[i], d[j], prime);
    return h;
  };
  for (const mpz_class& prime : primes)
    if (hasse(da, prime) != hasse(db, prime)) return false;
  return true;
}

namespace {

// M with Mᵀ from M = diag(values), by Witt cancellation: peel off one target
// value at a time. Any order works in principle; the search is bounded, so
// when a value cannot be split off another pending one is tried first.
std::optional<QMat> peel(const QMat& from, const std::vector<Rational>& values, std::size_t& budget) {
  auto source = diagonalize_congruence(from);
  DiagonalBasis basis;
  for (std::size_t k = 0; k < from.rows(); ++k) basis.push(source.transform.col(k), source.diagonal[k]);
  std::vector<std::size_t> pending(values.size());
  std::iota(pending.begin(), pending.end(), 0);
  QMat m(from.field(), from.rows(), from.cols());
  while (!pending.empty()) {
    bool progressed = false;
    for (std::size_t slot = 0; slot < pending.size() && !progressed; ++slot) {
      std::size_t k = pending[slot];
      auto rep = find_representation(basis.values, values[k], budget);
      if (!rep) continue;
      auto [v, remaining] = split_off(basis, *rep, values[k]);
      m.set_col(k, v);
      basis = std::move(remaining);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(slot));
      progressed = true;
    }
    if (!progressed) return std::nullopt;
  }
  return m;
}

}  // namespace

QMat find_congruence(const QMat& from, const QMat& to) {
  require(from.is_symmetric() && to.is_symmetric() && from.rows() == to.rows(), ErrorCode::Shape,
          "find_congruence: forms must be symmetric of equal size");
  require(is_invertible(from) && is_invertible(to), ErrorCode::Precondition,
          "find_congruence: forms must be nondegenerate");
  Signature sig = signature(from);
  if (!(sig == signature(to))) fail(ErrorCode::NotSameOrbit, "signatures differ");
  if (!rationally_congruent(from, to)) fail(ErrorCode::NoRationalWitness, "forms are not congruent over the rationals");

  // Route through diag(1, .., 1, -1, .., -1) when both forms are equivalent to
  // it: the targets stay tiny and the search rarely needs a tail.
  std::vector<Rational> unit(sig.positive, Rational(1));
  unit.resize(from.rows(), Rational(-1));
  QMat unit_form(from.field(), from.rows(), from.cols());
  for (std::size_t k = 0; k < unit.size(); ++k) unit_form(k, k) = unit[k];
  std::optional<QMat> c;
  std::size_t budget = kSearchBudget;
  if (rationally_congruent(from, unit_form)) {
    auto a = peel(from, unit, budget);
    auto b = a ? peel(to, unit, budget) : std::nullopt;
    if (a && b) c = *a * inverse(*b);
  }
  if (!c) {
    auto target = diagonalize_congruence(to);
    if (auto m = peel(from, target.diagonal, budget)) c = *m * inverse(target.transform);
  }
  if (!c) fail(ErrorCode::TooLarge, "congruence search budget exhausted");
  require(c->transpose() * from * *c == to, ErrorCode::Internal, "find_congruence: verification failed");
  return *c;
}

}  // namespace lagorb
