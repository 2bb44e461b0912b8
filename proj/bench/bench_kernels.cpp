// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "locpoly/catalog.hpp"
#include "locpoly/cli.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/kernels.hpp"

using namespace locpoly;

namespace {

ActionTable big_table() {
  // S4 on its 24 elements by right multiplication, restricted to half the points
  Group s4 = catalog_group("S4");
  std::vector<std::vector<int>> act = s4.table();
  for (std::size_t x = 12; x < act.size(); ++x)
    for (int& y : act[x]) y = -1;
  ActionTable t = table_of(act.size(), s4, act);
  for (std::size_t x = 12; x < t.points; ++x) t.present[x] = false;
  for (std::size_t x = 0; x < 12; ++x)
    for (int& y : t.act[x])
      if (y >= 12) y = -1;
  return t;
}

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_TableAxioms(benchmark::State& s) {
  ActionTable t = big_table();
  for (auto _ : s) benchmark::DoNotOptimize(table_axioms(t, mode(s)));
}

void BM_TableGroupoid(benchmark::State& s) {
  ActionTable t = big_table();
  for (auto _ : s) benchmark::DoNotOptimize(table_groupoid(t, mode(s)));
}

void BM_ConvolvePairs(benchmark::State& s) {
  Rng rng(1);
  std::vector<std::pair<Func, Func>> pairs;
  for (int i = 0; i < 16; ++i) pairs.push_back({random_padic_func(rng), random_padic_func(rng)});
  ConvolutionContext ctx{Group::padic_add(3)};
  for (auto _ : s) benchmark::DoNotOptimize(convolve_pairs(ctx, pairs, mode(s)));
}

void BM_FiniteSuite(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(suite_report("finite", 20, 1, mode(s)));
}

}  // namespace

BENCHMARK(BM_TableAxioms)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_TableGroupoid)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_ConvolvePairs)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiniteSuite)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
