#include "ellbundle/bundles.hpp"
#include "ellbundle/chern_formulas.hpp"
#include "ellbundle/identities.hpp"
#include "ellbundle/stability.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ellbundle;

static void BM_MasterIdentity(benchmark::State& state) {
  SuiteOptions opt;
  opt.truncation = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(suite_master(opt).passed);
}
BENCHMARK(BM_MasterIdentity)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_NewtonConversion(benchmark::State& state) {
  const auto r = RingSpec::fibration(static_cast<int>(state.range(0)));
  const auto ch = ch_Ua_fibration(r, 6, -3);
  for (auto _ : state) benchmark::DoNotOptimize(character_to_chern(ch));
}
BENCHMARK(BM_NewtonConversion)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GroupLaw(benchmark::State& state) {
  const auto e = WeierstrassCurve::over(Field::prime(state.range(0)), 4, 1);
  std::mt19937_64 rng(1);
  const auto p = e.random_point(rng);
  const auto q = e.random_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(e.add(p, q));
}
BENCHMARK(BM_GroupLaw)->Arg(13)->Arg(10007);

static void BM_DimHom(benchmark::State& state) {
  const auto e = WeierstrassCurve::over(Field::rationals(), 4, 0);
  const auto lam = DegreeZeroSheaf::line_bundle(e.point(Rational(0), Rational(0)));
  const AtiyahBundle v(e, {{lam, {3, 2, 1}}, {DegreeZeroSheaf::line_bundle(e.identity()), {2, 2}}});
  for (auto _ : state) benchmark::DoNotOptimize(dim_hom(v, v));
}
BENCHMARK(BM_DimHom);

static void BM_WallSearch(benchmark::State& state) {
  const auto lat = SurfaceLattice::rational_elliptic();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wall_search(lat, 2, 1, 0, bound).size());
}
BENCHMARK(BM_WallSearch)->Arg(10)->Arg(50)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
