#include <benchmark/benchmark.h>

#include <random>

#include "lapcoef/corpus.hpp"
#include "lapcoef/harness.hpp"
#include "lapcoef/matchings.hpp"
#include "lapcoef/spectra.hpp"

using namespace lapcoef;

namespace {

Graph bench_graph(int which) {
  if (which == 0) return generate_family(RootedTreeFamily{3, 4});  // n = 46
  std::mt19937_64 rng(42);
  Graph best;
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(40, rng);
    if (g.order() > best.order()) best = g;
  }
  return best;
}

void BM_CharpolyMultimodular(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_charpoly(g));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_CharpolyBerkowitz(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_charpoly_reference(g));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_TracesWalkDp(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_traces(g, 8));
}

void BM_TracesMatrixPower(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_traces_reference(g, 8));
}

void BM_MatchingsTreeDp(benchmark::State& state) {
  const Graph g = subdivision(generate_family(RootedTreeFamily{3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(matching_vector(g));
}

void BM_MatchingsDeletionContraction(benchmark::State& state) {
  const Graph g = subdivision(generate_family(RootedTreeFamily{3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(matching_vector_reference(g));
}

void BM_Verify(benchmark::State& state) {
  static const Corpus corpus = build_corpus("all-trees:8+random-graphs:8:100", 1);
  static const auto ids = select_identities({"all"});
  VerifyOptions options;
  options.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(corpus, ids, options));
}

void BM_Tables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_tables(state.range(0) != 0));
}

}  // namespace

BENCHMARK(BM_CharpolyMultimodular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharpolyBerkowitz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracesWalkDp)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TracesMatrixPower)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchingsTreeDp)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchingsDeletionContraction)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Verify)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tables)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
