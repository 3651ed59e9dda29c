#include "helpers.hpp"
#include "lagorb/random.hpp"

using namespace lagorb;
using lagorb::test::Q;
using lagorb::test::q;
using lagorb::test::vec;

TEST_CASE("rationals parse and canonicalize") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(scalar_traits<Rational>::to_string(q("-6/14")) == "-3/7");
  CHECK(scalar_traits<Rational>::to_string(q("0/5")) == "0");
  CHECK_THROWS_CODE(q("1/0"), ErrorCode::Schema);
  CHECK_THROWS_CODE(q("abc"), ErrorCode::Schema);
}

TEST_CASE("prime field arithmetic") {
  FieldTag f3 = FieldTag::prime(3);
  Zp two(2, 3);
  CHECK((two * two).value() == 1);
  CHECK(two.inverse() == two);
  CHECK((-two).value() == 1);
  CHECK(scalar_traits<Zp>::parse("-1", f3).value() == 2);
  CHECK(scalar_traits<Zp>::parse("1/2", f3).value() == 2);
  CHECK_THROWS_CODE(FieldTag::prime(4), ErrorCode::Precondition);
  CHECK(FieldTag::parse("F_3") == f3);
  CHECK(FieldTag::parse("Q") == Q);
  CHECK(f3.name() == "F_3");
}

TEST_CASE("rref and rank of small matrices") {
  QMat a = QMat::from_ints(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  CHECK(rank(QMat(Q, 3, 0)) == 0);
  CHECK(rank(QMat::identity(Q, 4)) == 4);

  QMat k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
}

TEST_CASE("inverse and solve") {
  QMat a = QMat::from_ints(Q, {{2, 1}, {1, 1}});
  QMat inv = inverse(a);
  CHECK(a * inv == QMat::identity(Q, 2));
  CHECK_THROWS_CODE(inverse(QMat::from_ints(Q, {{1, 2}, {2, 4}})), ErrorCode::Singular);

  auto x = solve(a, QMat::column(Q, {3, 2}));
  REQUIRE(x.has_value());
  CHECK(*x == QMat::column(Q, {1, 1}));
  CHECK_FALSE(solve(QMat::from_ints(Q, {{1, 1}, {1, 1}}), QMat::column(Q, {1, 2})).has_value());
}

TEST_CASE("subspace canonical form identifies equal spans") {
  QSubspace a = QSubspace::span(QMat::from_ints(Q, {{1, 1}, {1, 2}, {0, 0}}));
  QSubspace b = QSubspace::span(QMat::from_ints(Q, {{1, 0}, {0, 1}, {0, 0}}));
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.dim() == 2);
  QSubspace c = QSubspace::span(QMat::from_ints(Q, {{1, 2, 3}, {0, 0, 0}, {1, 2, 3}}));
  CHECK(c.dim() == 1);
  CHECK(c.contains(vec(3, {{0, 5}, {2, 5}})));
  CHECK_FALSE(c.contains(vec(3, {{0, 1}})));
}

TEST_CASE("sum, intersection and complement") {
  QMat eye = QMat::identity(Q, 4);
  QSubspace a = QSubspace::span(eye.block(0, 0, 4, 2));
  QSubspace b = QSubspace::span(eye.block(0, 1, 4, 2));
  CHECK(subspace_sum(a, b).dim() == 3);
  CHECK(intersect(a, b) == QSubspace::span(eye.col(1)));

  QSubspace comp = complement_in(QSubspace::span(eye.col(1)), a);
  CHECK(comp.dim() == 1);
  CHECK(subspace_sum(comp, QSubspace::span(eye.col(1))) == a);
  CHECK_THROWS_CODE(complement_in(b, a), ErrorCode::Precondition);
}

TEST_CASE("random subspaces satisfy rank-nullity and the Grassmann identity") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    auto random_matrix = [&](std::size_t cols) {
      QMat m(Q, n, cols);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(0, 2) == 0 ? rng.uniform(-3, 3) : 0;
      return m;
    };
    QMat m = random_matrix(static_cast<std::size_t>(rng.uniform(0, 5)));
    CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
    QSubspace a = QSubspace::span(random_matrix(static_cast<std::size_t>(rng.uniform(0, 4))));
    QSubspace b = QSubspace::span(random_matrix(static_cast<std::size_t>(rng.uniform(0, 4))));
    CHECK(subspace_sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(a.contains(intersect(a, b)));
  }
}

TEST_CASE("matrices over F_p") {
  FieldTag f2 = FieldTag::prime(2);
  FpMat a = FpMat::from_ints(f2, {{1, 1}, {1, 1}});
  CHECK(rank(a) == 1);
  CHECK((a * a).is_zero());
  FpMat b = FpMat::from_ints(f2, {{1, 1}, {0, 1}});
  CHECK(inverse(b) == b);
}

TEST_CASE("mixing fields is rejected") {
  FpMat a = FpMat::identity(FieldTag::prime(3), 2);
  FpMat b = FpMat::identity(FieldTag::prime(5), 2);
  CHECK_THROWS_CODE(a * b, ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(QMat(FieldTag::prime(3), 1, 1), ErrorCode::Precondition);
}

TEST_CASE("shape errors") {
  QMat a(Q, 2, 3);
  CHECK_THROWS_CODE(a * a, ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(a.block(1, 1, 2, 2), ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(inverse(a), ErrorCode::Shape);
}
