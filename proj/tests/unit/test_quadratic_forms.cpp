#include "helpers.hpp"
#include "lagorb/number_theory.hpp"
#include "lagorb/quadratic_forms.hpp"
#include "lagorb/random.hpp"

using namespace lagorb;
using lagorb::test::Q;

namespace {

QMat diag(std::initializer_list<std::int64_t> d) {
  QMat m(Q, d.size(), d.size());
  std::size_t i = 0;
  for (auto x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("factorization and squarefree parts") {
  auto f = nt::factorize(mpz_class(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(mpz_class(2), 3U));
  CHECK(f[1] == std::make_pair(mpz_class(3), 2U));
  CHECK(f[2] == std::make_pair(mpz_class(5), 1U));
  // Two primes above the trial-division bound.
  mpz_class big = mpz_class(1000003) * mpz_class(1000033);
  auto g = nt::factorize(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == 1000003);
  CHECK(g[1].first == 1000033);
  CHECK(nt::squarefree_part(mpz_class(72)) == 2);
  CHECK(nt::squarefree_part(mpz_class(-45)) == -5);
}

TEST_CASE("rational square roots") {
  CHECK(nt::rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(nt::rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(nt::rational_sqrt(Rational(-1)).has_value());
  CHECK(nt::rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("square roots modulo squarefree moduli") {
  for (long m : {7L, 13L, 15L, 21L, 105L}) {
    for (long a = 0; a < m; ++a) {
      auto r = nt::sqrt_mod(mpz_class(a), mpz_class(m));
      bool has_root = false;
      for (long x = 0; x < m; ++x)
        if ((x * x - a) % m == 0) has_root = true;
      CHECK(r.has_value() == has_root);
      if (r) CHECK(mpz_class((*r) * (*r) - a) % m == 0);
    }
  }
}

TEST_CASE("Legendre equations") {
  struct Case {
    long a, b;
    bool solvable;
  };
  for (Case c : {Case{1, 1, true}, Case{2, 7, true}, Case{-1, 2, true}, Case{3, 5, false}, Case{-1, -1, false},
                 Case{5, 11, true}, Case{-3, 7, true}, Case{6, 35, false}}) {
    auto sol = nt::solve_legendre(mpz_class(c.a), mpz_class(c.b));
    CHECK_MESSAGE(sol.has_value() == c.solvable, c.a, " ", c.b);
    if (sol) {
      const auto& [x, y, z] = *sol;
      CHECK(c.a * x * x + c.b * y * y == z * z);
      CHECK_FALSE((x == 0 && y == 0 && z == 0));
    }
  }
}

TEST_CASE("diagonalization repairs zero pivots") {
  QMat b = QMat::from_ints(Q, {{0, 1}, {1, 0}});
  auto d = diagonalize_congruence(b);
  QMat dd(Q, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) dd(i, i) = d.diagonal[i];
  CHECK(d.transform.transpose() * b * d.transform == dd);
  CHECK(signature(b) == Signature{1, 1});
  CHECK(signature(QMat(Q, 0, 0)) == Signature{0, 0});
  CHECK(signature(diag({1, 0, -2})) == Signature{1, 1});
}

TEST_CASE("Sylvester stability under random congruences") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    QMat b(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = rng.uniform(-3, 3);
    QMat c = random_invertible<Rational>(Q, n, rng);
    CHECK(signature(c.transpose() * b * c) == signature(b));
  }
}

TEST_CASE("binary and diagonal representations") {
  auto r = represent_binary(Rational(1), Rational(1), Rational(2));
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == 2);
  CHECK_FALSE(represent_binary(Rational(1), Rational(1), Rational(3)).has_value());
  auto h = represent_binary(Rational(1), Rational(-1), Rational(7, 3));
  REQUIRE(h.has_value());
  CHECK(h->first * h->first - h->second * h->second == Rational(7, 3));

  auto v = represent({Rational(1), Rational(1), Rational(1)}, Rational(6));
  REQUIRE(v.has_value());
  CHECK((*v)[0] * (*v)[0] + (*v)[1] * (*v)[1] + (*v)[2] * (*v)[2] == 6);
  // 7 is not a sum of three rational squares.
  CHECK_FALSE(represent({Rational(1), Rational(1), Rational(1)}, Rational(7)).has_value());
}

TEST_CASE("rational congruence between forms") {
  QMat from = diag({1, 1});
  QMat to = diag({2, 2});
  QMat c = find_congruence(from, to);
  CHECK(c.transpose() * from * c == to);

  CHECK_THROWS_CODE(find_congruence(diag({1}), diag({-1})), ErrorCode::NotSameOrbit);
  // Same real signature but different discriminant: not rationally congruent.
  CHECK_THROWS_CODE(find_congruence(diag({1}), diag({2})), ErrorCode::NoRationalWitness);
  CHECK_THROWS_CODE(find_congruence(diag({1, 1}), diag({1, 3})), ErrorCode::NoRationalWitness);
}

TEST_CASE("congruence recovers random transforms") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    QMat b(Q, n, n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = rng.coin() ? 1 : -1;
    QMat g = random_invertible<Rational>(Q, n, rng);
    QMat target = g.transpose() * b * g;
    QMat c = find_congruence(b, target);
    CHECK(c.transpose() * b * c == target);
  }
}

TEST_CASE("Hilbert symbols") {
  // (−1, −1) is −1 exactly at 2 and at infinity.
  CHECK(nt::hilbert_symbol(-1, -1, 2) == -1);
  CHECK(nt::hilbert_symbol(-1, -1, 3) == 1);
  CHECK(nt::hilbert_symbol(2, 3, 3) == -1);
  CHECK(nt::hilbert_symbol(3, 3, 3) == -1);
  CHECK(nt::hilbert_symbol(5, 5, 5) == 1);
  CHECK(nt::hilbert_symbol(2, 5, 2) == -1);
  CHECK(nt::hilbert_symbol(3, 7, 2) == -1);
  CHECK(nt::hilbert_symbol(1, 6, 7) == 1);
}

TEST_CASE("Hasse-Minkowski decision") {
  CHECK(rationally_congruent(diag({1, 1}), diag({2, 2})));
  CHECK(rationally_congruent(diag({1, 1, 1}), diag({33, 77, 21})));
  CHECK_FALSE(rationally_congruent(diag({1, 1}), diag({3, 3})));
  CHECK_FALSE(rationally_congruent(diag({1, -1}), diag({1, 1})));
  CHECK_FALSE(rationally_congruent(diag({1, 1, 1}), diag({1, 1, 7})));
}

TEST_CASE("congruence when the tail denominator needs several primes") {
  // A solution of 33x² + 77y² + 21z² = 1 has a denominator divisible by 231.
  QMat from = diag({33, 77, 21});
  QMat c = find_congruence(from, diag({1, 1, 1}));
  CHECK(c.transpose() * from * c == diag({1, 1, 1}));
}
