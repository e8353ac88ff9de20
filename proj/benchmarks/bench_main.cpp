#include <benchmark/benchmark.h>

#include <random>

#include "cctri/btdp.hpp"
#include "cctri/fastconv.hpp"
#include "cctri/hyper.hpp"
#include "cctri/oracle.hpp"
#include "cctri/pmc.hpp"
#include "cctri/polyspace.hpp"
#include "cctri/separators.hpp"

namespace cctri {
namespace {

void BM_MinimalSeparators(benchmark::State& state) {
  Graph g = gen_kcc2(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_separators(g));
}
BENCHMARK(BM_MinimalSeparators)->DenseRange(4, 9);

void BM_PmcsDedup(benchmark::State& state) {
  Graph g = gen_kcc2(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pmcs(g));
}
BENCHMARK(BM_PmcsDedup)->DenseRange(4, 7);

void BM_PmcsPolyspace(benchmark::State& state) {
  Graph g = gen_kcc2(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_pmcs_polyspace(g, [&](const VertexSet&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PmcsPolyspace)->DenseRange(4, 6);

void BM_TreewidthBtdp(benchmark::State& state) {
  GraphWithCover k = gen_kcc2(static_cast<int>(state.range(0)));
  auto pmcs = enumerate_pmcs(k.graph);
  for (auto _ : state) benchmark::DoNotOptimize(solve_treewidth(k.graph, pmcs, std::nullopt, &k.cover));
}
BENCHMARK(BM_TreewidthBtdp)->DenseRange(4, 7);

void BM_TreewidthFast(benchmark::State& state) {
  GraphWithCover k = gen_kcc2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_fast_optimize(k.graph, k.cover));
}
BENCHMARK(BM_TreewidthFast)->DenseRange(4, 12, 2);

void BM_FillFast(benchmark::State& state) {
  GraphWithCover k = gen_kcc2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fillin_fast(k.graph, k.cover));
}
BENCHMARK(BM_FillFast)->DenseRange(4, 10, 2);

void BM_TreewidthPolyspace(benchmark::State& state) {
  GraphWithCover k = gen_kcc2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_polyspace(k.graph, k.cover, TreewidthObjective{}));
}
BENCHMARK(BM_TreewidthPolyspace)->DenseRange(3, 6);

void BM_Convolution(benchmark::State& state) {
  const int cc = static_cast<int>(state.range(0));
  const auto method = static_cast<ConvolutionMethod>(state.range(1));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(0, 20);
  SetFunction f(cc), g(cc);
  for (auto& v : f.values) v = d(rng);
  for (auto& v : g.values) v = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(min_plus_subset_convolution(f, g, 20, method));
}
BENCHMARK(BM_Convolution)
    ->ArgsProduct({{6, 8, 10, 12}, {static_cast<int>(ConvolutionMethod::kTransform),
                                    static_cast<int>(ConvolutionMethod::kDirect)}});

void BM_Fhtw(benchmark::State& state) {
  Hypergraph h = gen_random_hypergraph(10, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fhtw(h));
}
BENCHMARK(BM_Fhtw)->DenseRange(3, 6);

}  // namespace
}  // namespace cctri

BENCHMARK_MAIN();
