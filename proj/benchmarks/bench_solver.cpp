#include <benchmark/benchmark.h>

#include "lamplight/graph.hpp"
#include "lamplight/solver.hpp"

namespace {

using namespace lamplight;

void BM_lightable_grid(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    const ActionMatrix a = adjacency(grid_graph(m, m));
    const LampConfig all{GF2Vector::ones(m * m)};
    for (auto _ : state) {
        auto p = lightable(a, all);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_lightable_grid)->Arg(8)->Arg(16)->Arg(24);

void BM_light_all_constructive_grid(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    const Graph g = grid_graph(m, m);
    for (auto _ : state) {
        PressSet p = light_all_constructive(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_light_all_constructive_grid)->Arg(2)->Arg(3)->Arg(4);

void BM_max_lit_hypercube(benchmark::State& state) {
    const ActionMatrix a = hypercube_game(std::size_t(state.range(0)));
    for (auto _ : state) {
        auto r = max_lit(a);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_max_lit_hypercube)->Arg(10)->Arg(16)->Arg(20);

} // namespace
