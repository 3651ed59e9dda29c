#include "lagorb/ff_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "lagorb/spsp_orbits.hpp"

namespace lagorb {
namespace {

void check_scale(std::size_t dim, const FieldTag& field) {
  require(!field.is_rational(), ErrorCode::Precondition, "census needs a prime field");
  if (dim > kMaxCensusDim || field.p > kMaxCensusPrime)
    fail(ErrorCode::TooLarge, "census limited to dim <= 6 and p <= 3");
}

std::string matrix_key(const FpMat& g) {
  std::string key;
  key.reserve(g.rows() * g.cols());
  for (const Zp& x : g.entries()) key.push_back(static_cast<char>(x.value()));
  return key;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index always becomes the root, so roots are component minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::uint64_t sp_order(std::size_t n, std::uint32_t p) {
  std::uint64_t order = ipow(p, n * n);
  for (std::size_t k = 1; k <= n; ++k) order *= ipow(p, 2 * k) - 1;
  return order;
}

std::uint64_t lagrangian_count(std::size_t n, std::uint32_t p) {
  std::uint64_t count = 1;
  for (std::size_t k = 1; k <= n; ++k) count *= ipow(p, k) + 1;
  return count;
}

std::vector<FpSubspace> enumerate_lagrangians(const SymplecticSpace<Zp>& v) {
  const FieldTag field = v.field();
  check_scale(v.dim(), field);
  const std::size_t dim = v.dim(), half = v.half_dim();
  std::vector<FpSubspace> out;

  // Pivot rows r_0 < ... < r_{half-1}; column k is 1 at r_k, 0 above r_k and
  // at the other pivot rows, free elsewhere below r_k.
  std::vector<bool> choose(dim, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(half), true);
  do {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < dim; ++r)
      if (choose[r]) pivots.push_back(r);
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t k = 0; k < half; ++k)
      for (std::size_t r = pivots[k] + 1; r < dim; ++r)
        if (!choose[r]) free_slots.emplace_back(r, k);
    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    while (true) {
      FpMat basis(field, dim, half);
      for (std::size_t k = 0; k < half; ++k) basis(pivots[k], k) = Zp(1, field.p);
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        basis(free_slots[s].first, free_slots[s].second) = Zp(digits[s], field.p);
      if (v.pairing(basis, basis).is_zero()) out.push_back(FpSubspace::span(basis));
      std::size_t pos = 0;
      while (pos < digits.size() && digits[pos] + 1 == field.p) digits[pos++] = 0;
      if (pos == digits.size()) break;
      ++digits[pos];
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

std::vector<FpMat> enumerate_sp(const SymplecticSpace<Zp>& v) {
  const FieldTag field = v.field();
  check_scale(v.dim(), field);
  if (sp_order(v.half_dim(), field.p) > kMaxGroupOrder) fail(ErrorCode::TooLarge, "symplectic group too large to enumerate");
  const std::size_t dim = v.dim();

  std::vector<FpMat> generators;
  std::vector<std::uint32_t> digits(dim, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < dim && digits[pos] + 1 == field.p) digits[pos++] = 0;
    if (pos == dim) break;
    ++digits[pos];
    FpMat w(field, dim, 1);
    for (std::size_t r = 0; r < dim; ++r) w(r, 0) = Zp(digits[r], field.p);
    generators.push_back(transvection(v, w, Zp(1, field.p)));
  }

  std::vector<FpMat> group{FpMat::identity(field, dim)};
  std::unordered_set<std::string> seen{matrix_key(group.front())};
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const FpMat& t : generators) {
      FpMat next = group[head] * t;
      if (seen.insert(matrix_key(next)).second) group.push_back(std::move(next));
    }
  }
  return group;
}

CensusReport orbit_census(std::size_t m, std::size_t n, std::uint32_t p, std::size_t threads) {
  require(m >= 1 && n >= 1, ErrorCode::Range, "census needs m, n >= 1");
  FieldTag field = FieldTag::prime(p);
  auto s = make_sum_space<Zp>(m, n, field);
  check_scale(s.dim(), field);
  std::uint64_t order = sp_order(s.m, p) * sp_order(s.n, p);
  if (order * lagrangian_count(s.m + s.n, p) > kMaxCensusWork) fail(ErrorCode::TooLarge, "census work limit exceeded");

  std::vector<FpSubspace> lagrangians = enumerate_lagrangians(s.v);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < lagrangians.size(); ++k) index.emplace(lagrangians[k].key(), k);
  std::vector<FpMat> g1s = enumerate_sp(s.v1);
  std::vector<FpMat> g2s = enumerate_sp(s.v2);

  // Each worker handles a contiguous range of g1 and records, per Lagrangian,
  // the images it found; union order does not affect the final partition.
  threads = std::max<std::size_t>(1, std::min(threads, g1s.size()));
  std::vector<UnionFind> partial(threads, UnionFind(lagrangians.size()));
  auto work = [&](std::size_t worker) {
    std::size_t lo = g1s.size() * worker / threads, hi = g1s.size() * (worker + 1) / threads;
    for (std::size_t a = lo; a < hi; ++a) {
      for (const FpMat& g2 : g2s) {
        FpMat g = block_diag(g1s[a], g2);
        for (std::size_t k = 0; k < lagrangians.size(); ++k) {
          FpSubspace img = image(g, lagrangians[k]);
          auto it = index.find(img.key());
          require(it != index.end(), ErrorCode::Internal, "census: image is not a known Lagrangian");
          partial[worker].unite(k, it->second);
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  UnionFind merged(lagrangians.size());
  for (auto& uf : partial)
    for (std::size_t k = 0; k < lagrangians.size(); ++k) merged.unite(k, uf.find(k));

  // Orbits in order of their smallest member.
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < lagrangians.size(); ++k) members[merged.find(k)].push_back(k);

  CensusReport report;
  report.p = p;
  report.m = s.m;
  report.n = s.n;
  report.total_lagrangians = lagrangians.size();
  report.group_order = static_cast<std::size_t>(order);
  bool pure = true;
  std::map<std::size_t, std::size_t> orbits_per_invariant;
  for (const auto& [root, ks] : members) {
    std::size_t inv = classify(s, lagrangians[ks.front()]).i;
    for (std::size_t k : ks)
      if (classify(s, lagrangians[k]).i != inv) pure = false;
    ++orbits_per_invariant[inv];
    report.orbits.push_back({ks.size(), inv});
  }
  bool one_orbit_per_fiber = orbits_per_invariant.size() == s.m + 1;
  for (const auto& [inv, count] : orbits_per_invariant)
    if (count != 1) one_orbit_per_fiber = false;
  report.agreement = pure && one_orbit_per_fiber;
  return report;
}

}  // namespace lagorb
