#include <benchmark/benchmark.h>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/transversal.hpp"

using namespace cliquecolor;

namespace {

// Two K6 blocks plus pendants pushing the max degree to clique number + 4.
Graph clique_cover_fixture() {
  Graph g(17);
  for (int block = 0; block < 2; ++block)
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) g.add_edge(6 * block + u, 6 * block + v);
  for (int p = 12; p < 17; ++p) g.add_edge(0, p);
  return g;
}

void BM_GraphHash(benchmark::State& state) {
  Graph g = parse_construction("lex:5:5");
  for (auto _ : state) benchmark::DoNotOptimize(graph_hash(g));
}
BENCHMARK(BM_GraphHash);

void BM_Dsatur(benchmark::State& state) {
  Graph g = parse_construction("lex:5:5");
  for (auto _ : state) benchmark::DoNotOptimize(dsatur_coloring(g));
}
BENCHMARK(BM_Dsatur);

void BM_MaxCliqueExact(benchmark::State& state) {
  Graph g = parse_construction("bk8");
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}
BENCHMARK(BM_MaxCliqueExact);

void BM_FChoosable(benchmark::State& state) {
  Graph g = parse_construction("moser");
  ListSizeFunction f = degree_minus_one_sizes(g);
  for (auto _ : state) benchmark::DoNotOptimize(f_choosable(g, f));
}
BENCHMARK(BM_FChoosable);

void BM_EngineComplete13(benchmark::State& state) {
  Graph g = parse_construction("k13");
  RVector r = {3, 3, 3, 3};
  auto witness = find_witness(g, sum_of(r));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_engine(g, r, *witness, EngineMode::theorem1));
}
BENCHMARK(BM_EngineComplete13);

void BM_HittingSet(benchmark::State& state) {
  Graph g = clique_cover_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(hitting_set(g));
}
BENCHMARK(BM_HittingSet);

}  // namespace

BENCHMARK_MAIN();
