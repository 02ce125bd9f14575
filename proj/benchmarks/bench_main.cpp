#include <benchmark/benchmark.h>

#include "algcurv/branch.hpp"
#include "algcurv/dalg.hpp"
#include "algcurv/diffield.hpp"
#include "algcurv/parse.hpp"

using namespace algcurv;

static void BM_PolyGcd(benchmark::State& state) {
  const VarAlphabet a({"x", "y", "z"});
  const MPoly g = parse_poly("x^2*y - 3*z + 1", a);
  const MPoly p = g * parse_poly("x*y*z + y^3 - 2", a);
  const MPoly q = g * parse_poly("x^3 - z^2*y + 5", a);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(p, q));
}
BENCHMARK(BM_PolyGcd);

static void BM_KappaSymbolDerivation(benchmark::State& state) {
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    DiffExpr k = kappa_symbol(0, 1);
    for (unsigned i = 0; i < depth; ++i) k = deriv_partial(k) / DiffExpr::jet(JetVar::x(1));
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_KappaSymbolDerivation)->Arg(2)->Arg(4)->Arg(6);

static void BM_ImplicitKappaCircle(benchmark::State& state) {
  const CurveIdeal circle({parse_poly("x^2 + (y + 1/2)^2 - 1/4", curve_alphabet(1))});
  for (auto _ : state) benchmark::DoNotOptimize(implicit_kappa(circle, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ImplicitKappaCircle)->Arg(3)->Arg(6);

static void BM_ReconstructTwistedCubic(benchmark::State& state) {
  const VarAlphabet a = curve_alphabet(2);
  const CurveIdeal cubic({parse_poly("y1 - x^2", a), parse_poly("y2 - x^3", a)});
  const std::vector<Rational> origin(3, Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(cubic, origin, 8));
}
BENCHMARK(BM_ReconstructTwistedCubic);

static void BM_SeriesReverse(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  const TruncSeries f = surrogate_series(7, order, SurrogateConstraint::UnitDerivative | SurrogateConstraint::ZeroConstant);
  for (auto _ : state) benchmark::DoNotOptimize(series_reverse(f));
}
BENCHMARK(BM_SeriesReverse)->Arg(10)->Arg(20);

static void BM_RelationSearchSurrogates(benchmark::State& state) {
  const SeriesFamily fam({surrogate_series(1, 24), surrogate_series(2, 24)});
  for (auto _ : state) benchmark::DoNotOptimize(d_relation_search(fam, 2, 2, false));
}
BENCHMARK(BM_RelationSearchSurrogates);
BENCHMARK_MAIN();
