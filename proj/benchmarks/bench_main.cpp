#include <benchmark/benchmark.h>

#include "lagorb/ff_oracle.hpp"
#include "lagorb/gl_orbits.hpp"
#include "lagorb/random.hpp"
#include "lagorb/spsp_orbits.hpp"

namespace {

using namespace lagorb;

const FieldTag kQ = FieldTag::rationals();

void bm_rref(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  QMat a = random_invertible<Rational>(kQ, n, rng, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(bm_rref)->Arg(4)->Arg(8)->Arg(16);

void bm_classify_spsp(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto s = make_sum_space<Rational>(n, n, kQ);
  Rng rng(7);
  QSubspace u = act(s, random_symplectic(s.v1, rng), random_symplectic(s.v2, rng), canonical_rep(s, n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, u));
}
BENCHMARK(bm_classify_spsp)->Arg(2)->Arg(4)->Arg(6);

void bm_stab_dim_spsp(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto s = make_sum_space<Rational>(n, n, kQ);
  QSubspace u = canonical_rep(s, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(stab_dim(s, u));
}
BENCHMARK(bm_stab_dim_spsp)->Arg(2)->Arg(3)->Arg(4);

void bm_witness_spsp(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto s = make_sum_space<Rational>(n, n, kQ);
  Rng rng(11);
  auto draw = [&] { return act(s, random_symplectic(s.v1, rng), random_symplectic(s.v2, rng), canonical_rep(s, 1)); };
  QSubspace u = draw(), v = draw();
  for (auto _ : state) benchmark::DoNotOptimize(witness(s, u, v));
}
BENCHMARK(bm_witness_spsp)->Arg(2)->Arg(3);

void bm_witness_gl(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto p = make_polarized_space(n);
  Rng rng(13);
  auto draw = [&] { return gl_action(p, random_invertible<Rational>(kQ, n, rng), canonical_rep(p, 0, 0, n / 2)); };
  QSubspace u = draw(), v = draw();
  for (auto _ : state) benchmark::DoNotOptimize(witness(p, u, v));
}
BENCHMARK(bm_witness_gl)->Arg(2)->Arg(3)->Arg(4);

void bm_ff_census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_census(1, 2, 2, 1));
}
BENCHMARK(bm_ff_census)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
