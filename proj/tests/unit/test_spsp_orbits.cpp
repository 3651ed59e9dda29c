#include "helpers.hpp"
#include "lagorb/random.hpp"
#include "lagorb/spsp_orbits.hpp"

using namespace lagorb;
using lagorb::test::Q;
using lagorb::test::span_of;
using lagorb::test::vec;

namespace {

// m = n = 1 coordinates: e1, f1, e2, f2.
QSubspace diagonal_11() { return span_of(4, {vec(4, {{0, 1}, {2, 1}}), vec(4, {{1, 1}, {3, 1}})}); }
QSubspace split_11() { return span_of(4, {vec(4, {{0, 1}}), vec(4, {{2, 1}})}); }

// m = 1, n = 2 coordinates: e1, f1, e2, g2, f2, h2.
QSubspace mixed_12() {
  return span_of(6, {vec(6, {{0, 1}, {2, 1}}), vec(6, {{1, 1}, {4, 1}}), vec(6, {{3, 1}})});
}

QSubspace random_lagrangian(const SumSpace<Rational>& s, std::size_t i, Rng& rng) {
  return act(s, random_symplectic(s.v1, rng), random_symplectic(s.v2, rng), canonical_rep(s, i));
}

}  // namespace

TEST_CASE("sum space block form") {
  auto s = make_sum_space<Rational>(1, 2, Q);
  CHECK(s.dim() == 6);
  CHECK_FALSE(s.swapped);
  CHECK(s.v.gram().block(0, 0, 2, 2) == s.v1.gram());
  CHECK(s.v.gram().block(2, 2, 4, 4) == -s.v2.gram());
  CHECK(s.v.gram().block(0, 2, 2, 4).is_zero());

  auto t = make_sum_space<Rational>(2, 1, Q);
  CHECK(t.swapped);
  CHECK(t.m == 1);
  CHECK(t.n == 2);
}

TEST_CASE("intersections with the factors") {
  auto s11 = make_sum_space<Rational>(1, 1, Q);
  auto [a1, a2] = intersect_factors(s11, diagonal_11());
  CHECK(a1.dim() == 0);
  CHECK(a2.dim() == 0);
  auto [b1, b2] = intersect_factors(s11, split_11());
  CHECK(b1 == span_of(2, {vec(2, {{0, 1}})}));
  CHECK(b2 == span_of(2, {vec(2, {{0, 1}})}));

  auto s12 = make_sum_space<Rational>(1, 2, Q);
  auto [c1, c2] = intersect_factors(s12, mixed_12());
  CHECK(c1.dim() == 0);
  CHECK(c2 == span_of(4, {vec(4, {{1, 1}})}));

  CHECK_THROWS_CODE(intersect_factors(s11, span_of(4, {vec(4, {{0, 1}})})), ErrorCode::Precondition);
  CHECK_THROWS_CODE(intersect_factors(s11, span_of(4, {vec(4, {{0, 1}}), vec(4, {{1, 1}})})),
                    ErrorCode::Precondition);
}

TEST_CASE("classify the worked examples") {
  auto s11 = make_sum_space<Rational>(1, 1, Q);
  CHECK(classify(s11, diagonal_11()) == SpSpClass{0, 0, 0});
  CHECK(classify(s11, split_11()) == SpSpClass{1, 1, 1});
  auto s12 = make_sum_space<Rational>(1, 2, Q);
  CHECK(classify(s12, mixed_12()) == SpSpClass{0, 0, 1});
}

TEST_CASE("graph data of the worked examples") {
  auto s = make_sum_space<Rational>(1, 1, Q);
  GraphData<Rational> g = graph_data(s, diagonal_11());
  CHECK(g.u1.dim() == 0);
  CHECK(g.u2.dim() == 0);
  CHECK(g.phi == QMat::identity(Q, 2));

  GraphData<Rational> h = graph_data(s, split_11());
  CHECK(h.phi.rows() == 0);
  CHECK(h.phi.cols() == 0);
  CHECK(from_graph(s, h) == split_11());
}

TEST_CASE("from_graph") {
  auto s = make_sum_space<Rational>(1, 1, Q);
  QSubspace zero = QSubspace::zero(Q, 2);
  CHECK(from_graph(s, GraphData<Rational>{zero, zero, QMat::identity(Q, 2)}) == diagonal_11());
  QSubspace anti = from_graph(s, GraphData<Rational>{zero, zero, -QMat::identity(Q, 2)});
  CHECK(anti == span_of(4, {vec(4, {{0, 1}, {2, -1}}), vec(4, {{1, 1}, {3, -1}})}));
  CHECK(is_lagrangian(s.v, anti));

  // Lagrangian factors and an empty map give the direct sum.
  QSubspace f_line = span_of(2, {vec(2, {{1, 1}})});
  QSubspace e_line = span_of(2, {vec(2, {{0, 1}})});
  CHECK(from_graph(s, GraphData<Rational>{f_line, e_line, QMat(Q, 0, 0)}) ==
        span_of(4, {vec(4, {{1, 1}}), vec(4, {{2, 1}})}));

  CHECK_THROWS_CODE(from_graph(s, GraphData<Rational>{zero, zero, QMat::from_ints(Q, {{2, 0}, {0, 1}})}),
                    ErrorCode::InvalidGraph);
  CHECK_THROWS_CODE(from_graph(s, GraphData<Rational>{e_line, zero, QMat(Q, 0, 0)}), ErrorCode::InvalidGraph);
}

TEST_CASE("canonical representatives") {
  auto s11 = make_sum_space<Rational>(1, 1, Q);
  CHECK(canonical_rep(s11, 1) == split_11());
  CHECK(canonical_rep(s11, 0) == diagonal_11());
  auto s12 = make_sum_space<Rational>(1, 2, Q);
  CHECK(canonical_rep(s12, 0) == mixed_12());
  CHECK_THROWS_CODE(canonical_rep(s12, 2), ErrorCode::Range);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 3; ++n) {
      auto s = make_sum_space<Rational>(m, n, Q);
      for (std::size_t i = 0; i <= m; ++i) {
        QSubspace u = canonical_rep(s, i);
        CHECK(is_lagrangian(s.v, u));
        CHECK(classify(s, u).i == i);
      }
    }
}

TEST_CASE("stabilizer dimensions of the worked examples") {
  auto s11 = make_sum_space<Rational>(1, 1, Q);
  CHECK(stab_dim(s11, canonical_rep(s11, 0)) == 3);
  CHECK(stab_dim(s11, canonical_rep(s11, 1)) == 4);
  auto s12 = make_sum_space<Rational>(1, 2, Q);
  CHECK(stab_dim(s12, canonical_rep(s12, 0)) == 7);
  CHECK(expected_stab_dim(1, 1, 0) == 3);
  CHECK(expected_stab_dim(1, 1, 1) == 4);
  CHECK(expected_stab_dim(1, 2, 0) == 7);
}

TEST_CASE("orbit dimension formulas") {
  CHECK(expected_orbit_dim(1, 1, 0) == 3);
  CHECK(expected_orbit_dim(1, 1, 1) == 2);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = m; n <= 6; ++n) {
      for (std::size_t i = 0; i <= m; ++i) CHECK(expected_orbit_dim(m, n, i) == closed_form_orbit_dim(m, n, i));
      CHECK(closed_form_orbit_dim(m, n, m) == m * (m + 1) / 2 + n * (n + 1) / 2);
    }
  CHECK_THROWS_CODE(expected_stab_dim(2, 1, 0), ErrorCode::Range);
  CHECK_THROWS_CODE(closed_form_orbit_dim(1, 2, 2), ErrorCode::Range);
}

TEST_CASE("invariance, round trip and witnesses on random samples") {
  Rng rng(101);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = m; n <= 3; ++n) {
      auto s = make_sum_space<Rational>(m, n, Q);
      for (std::size_t i = 0; i <= m; ++i)
        for (int trial = 0; trial < 4; ++trial) {
          QSubspace u = random_lagrangian(s, i, rng);
          CHECK(classify(s, u).i == i);
          CHECK(from_graph(s, graph_data(s, u)) == u);
          QSubspace u_prime = random_lagrangian(s, i, rng);
          auto w = witness(s, u, u_prime);
          CHECK(is_symplectic_map(s.v1, w.g1));
          CHECK(is_symplectic_map(s.v2, w.g2));
          CHECK(act(s, w.g1, w.g2, u) == u_prime);
          CHECK(stab_dim(s, u) == expected_stab_dim(m, n, i));
        }
    }
}

TEST_CASE("witness edge cases") {
  auto s = make_sum_space<Rational>(1, 1, Q);
  auto w = witness(s, diagonal_11(), diagonal_11());
  CHECK(act(s, w.g1, w.g2, diagonal_11()) == diagonal_11());
  CHECK_THROWS_CODE(witness(s, diagonal_11(), split_11()), ErrorCode::NotSameOrbit);
  CHECK_THROWS_CODE(act(s, QMat::identity(Q, 2) * Rational(2), QMat::identity(Q, 2), split_11()),
                    ErrorCode::InvalidElement);
}

TEST_CASE("closure curves") {
  auto s = make_sum_space<Rational>(1, 1, Q);
  auto c = closure_curve(s, 0, std::vector<Rational>{Rational(1), Rational(1, 2)});
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].second == diagonal_11());
  CHECK(c.points[1].second ==
        span_of(4, {vec(4, {{0, 1}, {2, Rational(1, 2)}}), vec(4, {{1, Rational(1, 2)}, {3, 1}})}));
  CHECK(classify(s, c.points[1].second).i == 0);
  CHECK(c.limit == span_of(4, {vec(4, {{0, 1}}), vec(4, {{3, 1}})}));
  CHECK(classify(s, c.limit).i == 1);
  CHECK_THROWS_CODE(closure_curve(s, 1, default_curve_parameters()), ErrorCode::NoDeeperStratum);
  CHECK(default_curve_parameters().size() == 11);
  CHECK(default_curve_parameters().back() == Rational(1, 1024));
}

TEST_CASE("classification over a prime field") {
  FieldTag f3 = FieldTag::prime(3);
  auto s = make_sum_space<Zp>(1, 2, f3);
  for (std::size_t i = 0; i <= 1; ++i) {
    FpSubspace u = canonical_rep(s, i);
    CHECK(classify(s, u).i == i);
    CHECK(from_graph(s, graph_data(s, u)) == u);
  }
}
