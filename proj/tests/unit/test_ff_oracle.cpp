#include <set>
#include <string>

#include "helpers.hpp"
#include "lagorb/ff_oracle.hpp"

using namespace lagorb;

TEST_CASE("lagrangian enumeration") {
  CHECK(enumerate_lagrangians(std_space<Zp>(1, FieldTag::prime(3))).size() == 4);
  CHECK(enumerate_lagrangians(std_space<Zp>(2, FieldTag::prime(3))).size() == 40);
  auto l6 = enumerate_lagrangians(std_space<Zp>(3, FieldTag::prime(2)));
  CHECK(l6.size() == 135);
  CHECK(lagrangian_count(3, 2) == 135);
  std::set<std::string> keys;
  for (const auto& u : l6) keys.insert(u.key());
  CHECK(keys.size() == l6.size());
}

TEST_CASE("symplectic group enumeration") {
  CHECK(enumerate_sp(std_space<Zp>(1, FieldTag::prime(3))).size() == 24);
  CHECK(enumerate_sp(std_space<Zp>(1, FieldTag::prime(2))).size() == 6);
  auto g = enumerate_sp(std_space<Zp>(2, FieldTag::prime(2)));
  CHECK(g.size() == 720);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(1, 3) == 24);
}

TEST_CASE("group closure") {
  auto v = std_space<Zp>(1, FieldTag::prime(3));
  auto g = enumerate_sp(v);
  std::set<std::string> keys;
  auto key = [](const FpMat& m) {
    std::string out;
    for (const Zp& x : m.entries()) out += std::to_string(x.value());
    return out;
  };
  for (const auto& x : g) keys.insert(key(x));
  for (const auto& x : g) {
    CHECK(is_symplectic_map(v, x));
    CHECK(keys.count(key(inverse(x))) == 1);
    for (const auto& y : g) CHECK(keys.count(key(x * y)) == 1);
  }
}

TEST_CASE("census agrees with the invariant") {
  struct Case {
    std::size_t m, n;
    std::uint32_t p;
    std::size_t total;
  };
  for (Case c : {Case{1, 1, 2, 15}, Case{1, 1, 3, 40}, Case{1, 2, 2, 135}}) {
    CensusReport r = orbit_census(c.m, c.n, c.p);
    CHECK(r.total_lagrangians == c.total);
    CHECK(r.orbits.size() == c.m + 1);
    CHECK(r.agreement);
    std::size_t sum = 0;
    for (const auto& o : r.orbits) sum += o.size;
    CHECK(sum == c.total);
  }
}

TEST_CASE("census is independent of the thread count") {
  CHECK(orbit_census(1, 1, 3, 1) == orbit_census(1, 1, 3, 3));
}

TEST_CASE("scale guards") {
  CHECK_THROWS_CODE(orbit_census(2, 2, 2), ErrorCode::TooLarge);
  CHECK_THROWS_CODE(orbit_census(1, 1, 5), ErrorCode::TooLarge);
  CHECK_THROWS_CODE(enumerate_sp(std_space<Zp>(3, FieldTag::prime(3))), ErrorCode::TooLarge);
  CHECK_THROWS_CODE(enumerate_lagrangians(std_space<Zp>(4, FieldTag::prime(2))), ErrorCode::TooLarge);
}
