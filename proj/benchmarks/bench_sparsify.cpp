#include <benchmark/benchmark.h>

#include <random>

#include "cutsparse/streaming.hpp"
#include "cutsparse/strength.hpp"
#include "cutsparse/union_find.hpp"

using namespace cutsparse;

namespace {

void BM_onepass(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  EdgeStream g = generate_random_multigraph(n, 16ull * n, 1);
  RefineParams params = RefineParams::defaults(n);
  CoinOracle coins(2);
  for (auto _ : state) {
    Sparsifier s = onepass_sparsify(g, params, coins);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(g.m()));
}
BENCHMARK(BM_onepass)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_union_find(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<std::pair<uint32_t, uint32_t>> ops(4 * n);
  for (auto& op : ops)
    op = {static_cast<uint32_t>(rng() % n), static_cast<uint32_t>(rng() % n)};
  for (auto _ : state) {
    UnionFind uf(n);
    for (auto [a, b] : ops) {
      if (a == b) continue;
      benchmark::DoNotOptimize(uf.unite(a, b));
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(ops.size()));
}
BENCHMARK(BM_union_find)->Arg(1 << 14)->Arg(1 << 17);

void BM_mincut(benchmark::State& state) {
  WeightedGraph g = to_weighted(generate_gnp(static_cast<uint32_t>(state.range(0)), 0.2, 5));
  for (auto _ : state) {
    CutResult c = mincut(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_mincut)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_exact_strengths(benchmark::State& state) {
  WeightedGraph g = to_weighted(generate_gnp(static_cast<uint32_t>(state.range(0)), 0.3, 7));
  for (auto _ : state) {
    StrengthMap s = exact_strengths(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_exact_strengths)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
