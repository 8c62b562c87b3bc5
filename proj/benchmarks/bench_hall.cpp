#include <benchmark/benchmark.h>

#include "hallbase/basis.hpp"

using namespace hallbase;

namespace {

Quiver d4() { return Quiver(4, {{1, 4}, {2, 4}, {3, 4}}); }
Quiver a3() { return Quiver(3, {{1, 2}, {2, 3}}); }

void BM_CountLayer(benchmark::State& state) {
  RepTheory rt(d4());
  HallEngine engine(rt);
  const auto& rs = rt.roots();
  const auto lambda = rs.single(rs.find(DimVector{1, 1, 1, 2})) + rs.single(rs.simple(1), 3);
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine.count_layer(lambda, 1, 2, p));
}
BENCHMARK(BM_CountLayer)->Arg(2)->Arg(5)->Arg(11);

void BM_CountColumn(benchmark::State& state) {
  RepTheory rt(d4());
  HallEngine engine(rt);
  const auto& rs = rt.roots();
  const auto nu = rs.semisimple(DimVector{1, 1, 1, 0});
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine.count_column(4, 2, nu, p));
}
BENCHMARK(BM_CountColumn)->Arg(2)->Arg(5)->Arg(11);

void BM_GammaWordCold(benchmark::State& state) {
  RepTheory rt(d4());
  const Word w{1, 2, 3, 4, 4, 1, 2};
  for (auto _ : state) {
    HallEngine engine(rt);
    benchmark::DoNotOptimize(engine.gamma_word(w));
  }
}
BENCHMARK(BM_GammaWordCold)->Unit(benchmark::kMillisecond);

void BM_Fibre(benchmark::State& state) {
  RepTheory rt(a3());
  HallEngine engine(rt);
  MonoidWords monoid(engine);
  const auto& rs = rt.roots();
  const auto lambda = rs.single(rs.find(DimVector{1, 1, 1}), 2);
  for (auto _ : state) benchmark::DoNotOptimize(monoid.fibre(lambda));
}
BENCHMARK(BM_Fibre)->Unit(benchmark::kMillisecond);

void BM_CanonicalBasis(benchmark::State& state) {
  RepTheory rt(d4());
  const DimVector d{1, 1, 1, state.range(0)};
  for (auto _ : state) {
    HallEngine engine(rt);
    MonoidWords monoid(engine);
    BasisLab basis(monoid);
    benchmark::DoNotOptimize(basis.canonical_basis(d));
  }
}
BENCHMARK(BM_CanonicalBasis)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
