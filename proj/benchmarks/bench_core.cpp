#include <benchmark/benchmark.h>

#include "dtk/chartab.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/indicators.hpp"
#include "dtk/snconj.hpp"
#include "dtk/ydcat.hpp"

using namespace dtk;

static void BM_GroupClosure(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = build_group("sym:" + std::to_string(state.range(0)));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupClosure)->Arg(5)->Arg(6)->Arg(7);

static void BM_CharacterTable(benchmark::State& state) {
  auto host = make_group_classes(build_group("sym:" + std::to_string(state.range(0))));
  for (auto _ : state) {
    CharacterTable tab = character_table(host);
    benchmark::DoNotOptimize(tab.degrees.data());
  }
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(5)->Arg(6);

static void BM_SMatrix(benchmark::State& state) {
  DoubleCategory cat(build_group("sym:3"));
  cat.simples();
  for (auto _ : state) {
    auto s = smatrix_unnormalized(cat, 1);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_SMatrix);

static void BM_IndicatorVectors(benchmark::State& state) {
  for (auto _ : state) {
    DoubleCategory cat(build_group("paper:ex1"));
    auto vectors = all_indicator_vectors(cat, 0, 1);
    benchmark::DoNotOptimize(vectors.data());
  }
}
BENCHMARK(BM_IndicatorVectors);

static void BM_SnCheckEnumerate(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = snconj::check_sn(n, snconj::Method::enumerate, 1000000, 1);
    benchmark::DoNotOptimize(report.results.data());
  }
}
BENCHMARK(BM_SnCheckEnumerate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SnCheckClasses(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = snconj::check_sn(n, snconj::Method::classes, 1000000, 1);
    benchmark::DoNotOptimize(report.results.data());
  }
}
BENCHMARK(BM_SnCheckClasses)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
