#include "helpers.hpp"
#include "lagorb/random.hpp"
#include "lagorb/symplectic.hpp"

using namespace lagorb;
using lagorb::test::Q;
using lagorb::test::span_of;
using lagorb::test::vec;

TEST_CASE("standard space pairs e_i with f_i") {
  auto v = std_space<Rational>(2, Q);
  QMat e1 = vec(4, {{0, 1}}), f1 = vec(4, {{2, 1}}), e2 = vec(4, {{1, 1}});
  CHECK(v.form(e1, f1) == 1);
  CHECK(v.form(f1, e1) == -1);
  CHECK(v.form(e1, e2) == 0);
  CHECK(v.half_dim() == 2);
}

TEST_CASE("gram validation") {
  CHECK_THROWS_CODE(SymplecticSpace<Rational>(QMat::from_ints(Q, {{0, 1}, {1, 0}})), ErrorCode::Precondition);
  CHECK_THROWS_CODE(SymplecticSpace<Rational>(QMat::from_ints(Q, {{1, 1}, {-1, 0}})), ErrorCode::Precondition);
  CHECK_THROWS_CODE(SymplecticSpace<Rational>(QMat(Q, 2, 2)), ErrorCode::Precondition);
  CHECK_THROWS_CODE(SymplecticSpace<Rational>(QMat(Q, 3, 3)), ErrorCode::Shape);
}

TEST_CASE("perp, isotropy and Lagrangians in dimension 4") {
  auto v = std_space<Rational>(2, Q);
  QSubspace e_span = span_of(4, {vec(4, {{0, 1}}), vec(4, {{1, 1}})});
  CHECK(is_lagrangian(v, e_span));
  CHECK(perp(v, e_span) == e_span);

  QSubspace line = span_of(4, {vec(4, {{0, 1}})});
  CHECK(is_isotropic(v, line));
  CHECK_FALSE(is_lagrangian(v, line));
  CHECK(perp(v, line).dim() == 3);

  QSubspace plane = span_of(4, {vec(4, {{0, 1}}), vec(4, {{2, 1}})});
  CHECK_FALSE(is_isotropic(v, plane));
  CHECK(perp(v, plane) == span_of(4, {vec(4, {{1, 1}}), vec(4, {{3, 1}})}));
}

TEST_CASE("double perp is the identity on random subspaces") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto v = std_space<Rational>(n, Q);
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(2 * n)));
    QMat gens(Q, 2 * n, k);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < k; ++j) gens(i, j) = rng.uniform(-2, 2);
    QSubspace u = QSubspace::span(gens);
    CHECK(perp(v, perp(v, u)) == u);
    CHECK(perp(v, u).dim() + u.dim() == 2 * n);
  }
}

TEST_CASE("transvections and random products are symplectic") {
  Rng rng(3);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto v = std_space<Rational>(n, Q);
    QMat t = transvection(v, random_nonzero_vector<Rational>(rng, Q, 2 * n, 2), Rational(3, 2));
    CHECK(is_symplectic_map(v, t));
    for (int k = 0; k < 10; ++k) CHECK(is_symplectic_map(v, random_symplectic(v, rng)));
  }
  auto v = std_space<Rational>(1, Q);
  CHECK_FALSE(is_symplectic_map(v, QMat::from_ints(Q, {{2, 0}, {0, 2}})));
}

TEST_CASE("lie algebra membership") {
  auto v = std_space<Rational>(1, Q);
  CHECK(in_sp_lie_algebra(v, QMat::from_ints(Q, {{1, 0}, {0, -1}})));
  CHECK(in_sp_lie_algebra(v, QMat::from_ints(Q, {{0, 1}, {0, 0}})));
  CHECK_FALSE(in_sp_lie_algebra(v, QMat::identity(Q, 2)));
}

TEST_CASE("reduction by an isotropic line") {
  auto v = std_space<Rational>(2, Q);
  QSubspace line = span_of(4, {vec(4, {{0, 1}, {1, 1}})});
  auto r = reduce(v, line);
  CHECK(r.dim() == 2);
  CHECK(r.core_perp().dim() == 3);
  // The reduced form is the restriction of Ω to the section.
  CHECK(r.reduced().gram() == v.pairing(r.section(), r.section()));
  // Lifting then projecting is the identity on reduced coordinates.
  QMat coords = QMat::from_ints(Q, {{1, 2}, {-1, 3}});
  CHECK(project(r, lift(r, coords)) == coords);
  // Projection kills the core.
  CHECK(project(r, line.basis()).is_zero());
  CHECK_THROWS_CODE(project(r, vec(4, {{2, 1}})), ErrorCode::Precondition);
  CHECK_THROWS_CODE(reduce(v, span_of(4, {vec(4, {{0, 1}}), vec(4, {{2, 1}})})), ErrorCode::Precondition);
}

TEST_CASE("reduction preserves the pairing on random isotropic data") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto v = std_space<Rational>(n, Q);
    QMat g = random_symplectic(v, rng);
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    QSubspace u = image(g, QSubspace::span(QMat::identity(Q, 2 * n).block(0, 0, 2 * n, k)));
    auto r = reduce(v, u);
    CHECK(r.dim() == 2 * (n - k));
    // Ω'([x], [y]) = Ω(x, y) for x, y ∈ U^⊥.
    QMat x = r.core_perp().basis();
    QMat px = project(r, x);
    CHECK(r.reduced().pairing(px, px) == v.pairing(x, x));
    // Pulling back a reduced Lagrangian gives a Lagrangian.
    QMat sb = symplectic_basis(r.reduced());
    QSubspace t = QSubspace::span(sb.block(0, 0, r.dim(), r.dim() / 2));
    CHECK(is_lagrangian(r.reduced(), t));
    CHECK(is_lagrangian(v, pull_subspace(r, t)));
    CHECK(push_subspace(r, pull_subspace(r, t)) == t);
  }
}

TEST_CASE("symplectic basis of a twisted form") {
  QMat gram = QMat::from_ints(Q, {{0, 2, 1, 0}, {-2, 0, 0, 3}, {-1, 0, 0, 5}, {0, -3, -5, 0}});
  SymplecticSpace<Rational> v(gram);
  QMat b = symplectic_basis(v);
  CHECK(v.pairing(b, b) == std_space<Rational>(2, Q).gram());
}

TEST_CASE("symplectic basis over F_2") {
  FieldTag f2 = FieldTag::prime(2);
  auto v = std_space<Zp>(3, f2);
  FpMat b = symplectic_basis(v);
  CHECK(v.pairing(b, b) == v.gram());
}

TEST_CASE("extending a partial symplectic basis") {
  auto v = std_space<Rational>(2, Q);
  QMat a = QMat::from_columns(Q, 4, {vec(4, {{0, 1}, {1, 1}}), vec(4, {{1, 1}})});
  std::vector<std::optional<QMat>> b(2);
  QMat full = extend_symplectic_basis(v, a, b);
  CHECK(v.pairing(full, full) == v.gram());
  CHECK(full.block(0, 0, 4, 2) == a);
}
