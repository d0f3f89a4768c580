#include <benchmark/benchmark.h>

#include "lamplight/graph.hpp"
#include "lamplight/matchings.hpp"

namespace {

using namespace lamplight;

void BM_enumerate_matchings_grid(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    const Graph g = grid_graph(m, m);
    for (auto _ : state) {
        auto n = enumerate_complete_matchings(g);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_enumerate_matchings_grid)->Arg(3)->Arg(4);

void BM_matching_parity_grid(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    const Graph g = grid_graph(m, m);
    for (auto _ : state) {
        int p = matching_parity(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_matching_parity_grid)->Arg(8)->Arg(16);

void BM_monomer_dimer_parity(benchmark::State& state) {
    const std::size_t w = std::size_t(state.range(0));
    const std::size_t len = std::size_t(state.range(1));
    for (auto _ : state) {
        int p = monomer_dimer_parity(w, len);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_monomer_dimer_parity)->Args({8, 8})->Args({10, 20})->Args({12, 40});

} // namespace
