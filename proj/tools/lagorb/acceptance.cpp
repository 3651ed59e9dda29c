#include "acceptance.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <tuple>

#include "lagorb/ff_oracle.hpp"
#include "lagorb/gl_orbits.hpp"
#include "lagorb/random.hpp"
#include "lagorb/spsp_orbits.hpp"

namespace lagorb::acceptance {
namespace {

const FieldTag kQ = FieldTag::rationals();

// Accumulates failures; only the first few are kept in the detail line.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::ostringstream first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed < 3) first << (failed ? "; " : "") << what;
    ++failed;
  }

  void finish(CriterionResult& r) const {
    r.pass = checked > 0 && failed == 0;
    std::ostringstream out;
    out << checked << " checks";
    if (failed) out << ", " << failed << " failed: " << first.str();
    r.detail = out.str();
  }
};

std::string label(std::initializer_list<std::size_t> xs) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (std::size_t x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << ")";
  return out.str();
}

// A random point of stratum i: a canonical representative moved by a random
// element of Sp(V1) × Sp(V2).
QSubspace random_in_stratum(const SumSpace<Rational>& s, std::size_t i, Rng& rng) {
  return act(s, random_symplectic(s.v1, rng), random_symplectic(s.v2, rng), canonical_rep(s, i));
}

QSubspace random_in_class(const PolarizedSpace& p, std::size_t i, std::size_t j, std::size_t k, Rng& rng) {
  return gl_action(p, random_invertible<Rational>(kQ, p.n, rng), canonical_rep(p, i, j, k));
}

// Random Lagrangian of V with no orbit bias: short random transvection words
// land in degenerate strata often, long ones in the open stratum.
QSubspace random_lagrangian(const PolarizedSpace& p, Rng& rng) {
  auto length = static_cast<std::size_t>(rng.uniform(0, 2 * static_cast<std::int64_t>(p.n) + 2));
  return image(random_symplectic(p.v, rng, length), p.w1);
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> gl_labels(std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      for (std::size_t k = 0; k <= n - i - j; ++k) out.emplace_back(i, j, k);
  return out;
}

void orbit_dimension(Tally& t) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = m; n <= 4; ++n) {
      auto s = make_sum_space<Rational>(m, n, kQ);
      std::size_t group = m * (2 * m + 1) + n * (2 * n + 1);
      for (std::size_t i = 0; i <= m; ++i)
        t.check(group - stab_dim(s, canonical_rep(s, i)) == closed_form_orbit_dim(m, n, i),
                "orbit dim " + label({m, n, i}));
    }
}

void stabilizer_sum(Tally& t) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = m; n <= 4; ++n) {
      auto s = make_sum_space<Rational>(m, n, kQ);
      std::size_t group = m * (2 * m + 1) + n * (2 * n + 1);
      for (std::size_t i = 0; i <= m; ++i) {
        std::size_t stab = stab_dim(s, canonical_rep(s, i));
        t.check(stab == expected_stab_dim(m, n, i), "stab dim " + label({m, n, i}));
        t.check(group - expected_stab_dim(m, n, i) == closed_form_orbit_dim(m, n, i),
                "factor sum " + label({m, n, i}));
      }
    }
}

void gl_stabilizer(Tally& t) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = make_polarized_space(n);
    for (auto [i, j, k] : gl_labels(n)) {
      std::size_t d = n - i - j;
      std::size_t closed = i * i + j * j + d * (d - 1) / 2 + i * j + (i + j) * d;
      std::size_t stab = stab_dim(p, canonical_rep(p, i, j, k));
      t.check(stab == closed && stab == expected_stab_dim(n, i, j, k), "gl stab " + label({n, i, j, k}));
    }
  }
}

void ff_census(Tally& t) {
  const std::tuple<std::size_t, std::size_t, std::uint32_t, std::size_t> cases[] = {
      {1, 1, 2, 15}, {1, 1, 3, 40}, {1, 2, 2, 135}};
  for (auto [m, n, p, total] : cases) {
    CensusReport r = orbit_census(m, n, p, 1);
    std::set<std::size_t> invariants;
    std::size_t covered = 0;
    for (const auto& o : r.orbits) {
      invariants.insert(o.invariant_i);
      covered += o.size;
    }
    std::string tag = label({m, n, p});
    t.check(r.total_lagrangians == total && covered == total, "census total " + tag);
    t.check(r.orbits.size() == m + 1 && invariants.size() == m + 1, "census orbit count " + tag);
    t.check(r.agreement, "census invariant purity " + tag);
  }
}

void gl_counts(Tally& t, Rng& rng) {
  const std::size_t expected[] = {0, 4, 10, 20};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = make_polarized_space(n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (auto [i, j, k] : gl_labels(n)) {
      GlClass c = classify(p, canonical_rep(p, i, j, k));
      t.check(c.i == i && c.j == j && c.k == k, "canonical class " + label({n, i, j, k}));
      seen.emplace(c.i, c.j, c.k);
    }
    t.check(seen.size() == expected[n] && orbit_census_formula(n) == expected[n], "class count n=" + std::to_string(n));
    for (int s = 0; s < 1000; ++s) {
      GlClass c = classify(p, random_lagrangian(p, rng));
      t.check(seen.count({c.i, c.j, c.k}) == 1, "random sample outside known classes n=" + std::to_string(n));
    }
  }
}

void invariance(Tally& t, Rng& rng) {
  for (int s = 0; s < 500; ++s) {
    auto m = static_cast<std::size_t>(rng.uniform(1, 3));
    auto n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(m), 3));
    auto sum = make_sum_space<Rational>(m, n, kQ);
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m)));
    QSubspace u = random_in_stratum(sum, i, rng);
    SpSpClass before = classify(sum, u);
    SpSpClass after = classify(sum, act(sum, random_symplectic(sum.v1, rng), random_symplectic(sum.v2, rng), u));
    t.check(before == after && before.i == i, "spsp invariance " + label({m, n, i}));
  }
  for (int s = 0; s < 500; ++s) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto p = make_polarized_space(n);
    QSubspace u = random_lagrangian(p, rng);
    QMat g = random_invertible<Rational>(kQ, n, rng);
    t.check(classify(p, u) == classify(p, gl_action(p, g, u)), "gl invariance n=" + std::to_string(n));
  }
  // φ_{gU} = g^{-T} φ_U g^{-1} on the open stratum L_{0,0}.
  for (int s = 0; s < 500; ++s) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto p = make_polarized_space(n);
    auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    QSubspace u = random_in_class(p, 0, 0, k, rng);
    QMat g = random_invertible<Rational>(kQ, n, rng);
    QMat g_inv = inverse(g);
    t.check(graph_map(p, gl_action(p, g, u)) == g_inv.transpose() * graph_map(p, u) * g_inv,
            "graph transform n=" + std::to_string(n));
  }
}

void witnesses(Tally& t, Rng& rng) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 3; ++n) {
      auto s = make_sum_space<Rational>(m, n, kQ);
      for (std::size_t i = 0; i <= m; ++i)
        for (int r = 0; r < 100; ++r) {
          QSubspace u = random_in_stratum(s, i, rng), v = random_in_stratum(s, i, rng);
          auto w = witness(s, u, v);
          t.check(is_symplectic_map(s.v1, w.g1) && is_symplectic_map(s.v2, w.g2) && act(s, w.g1, w.g2, u) == v,
                  "spsp witness " + label({m, n, i}));
        }
    }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = make_polarized_space(n);
    for (auto [i, j, k] : gl_labels(n))
      for (int r = 0; r < 100; ++r) {
        QSubspace u = random_in_class(p, i, j, k, rng), v = random_in_class(p, i, j, k, rng);
        QMat g = witness(p, u, v);
        t.check(is_invertible(g) && gl_action(p, g, u) == v, "gl witness " + label({n, i, j, k}));
      }
  }
}

void round_trip(Tally& t, Rng& rng) {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = m; n <= 3; ++n) {
      auto s = make_sum_space<Rational>(m, n, kQ);
      for (std::size_t i = 0; i <= m; ++i)
        for (int r = 0; r < 100; ++r) {
          QSubspace u = random_in_stratum(s, i, rng);
          t.check(from_graph(s, graph_data(s, u)) == u, "round trip " + label({m, n, i}));
        }
    }
}

void closure(Tally& t) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 3; ++n) {
      auto s = make_sum_space<Rational>(m, n, kQ);
      for (std::size_t i = 0; i < m; ++i) {
        auto curve = closure_curve(s, i, default_curve_parameters());
        for (const auto& [param, u] : curve.points) t.check(classify(s, u).i == i, "curve point " + label({m, n, i}));
        t.check(curve.points.size() == 11, "curve parameters " + label({m, n, i}));
        t.check(classify(s, curve.limit).i == i + 1, "curve limit " + label({m, n, i}));
      }
    }
}

void cross_oracle(Tally& t, Rng& rng) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto p = make_polarized_space(n);
    auto labels = gl_labels(n);
    for (int r = 0; r < 200; ++r) {
      // Alternate between every class in turn and unbiased samples.
      QSubspace u;
      if (r % 2 == 0) {
        auto [i, j, k] = labels[static_cast<std::size_t>(r / 2) % labels.size()];
        u = random_in_class(p, i, j, k, rng);
      } else {
        u = random_lagrangian(p, rng);
      }
      t.check(signature(beta_form(p, u)) == classify(p, u).signature(), "beta signature n=" + std::to_string(n));
    }
  }
}

const char* const kNames[kCriteria] = {
    "spsp orbit dimension closed form",
    "spsp stabilizer factor sum",
    "gl stabilizer dimension",
    "finite-field census",
    "gl orbit counts",
    "invariance and graph transform",
    "constructive transitivity",
    "graph data round trip",
    "closure curves",
    "beta form cross-check",
};

}  // namespace

CriterionResult run_one(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriteria) fail(ErrorCode::Range, "no such acceptance criterion");
  CriterionResult r;
  r.id = id;
  r.name = kNames[id - 1];
  // Each criterion draws from its own stream so they can run in isolation.
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: orbit_dimension(t); break;
      case 2: stabilizer_sum(t); break;
      case 3: gl_stabilizer(t); break;
      case 4: ff_census(t); break;
      case 5: gl_counts(t, rng); break;
      case 6: invariance(t, rng); break;
      case 7: witnesses(t, rng); break;
      case 8: round_trip(t, rng); break;
      case 9: closure(t); break;
      case 10: cross_oracle(t, rng); break;
    }
    t.finish(r);
  } catch (const std::exception& e) {
    t.finish(r);
    r.pass = false;
    r.detail += "; threw: " + std::string(e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_one(id, seed));
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace lagorb::acceptance
