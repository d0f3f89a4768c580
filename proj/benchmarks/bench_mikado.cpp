#include <benchmark/benchmark.h>

#include "lamplight/mikado.hpp"

namespace {

using namespace lamplight;

void BM_mikado_diamond(benchmark::State& state) {
    const std::size_t k = std::size_t(state.range(0));
    for (auto _ : state) {
        Pattern d = mikado_diamond(k);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_mikado_diamond)->Arg(8)->Arg(10)->Arg(12);

void BM_min_lamps_search(benchmark::State& state) {
    const std::size_t w = std::size_t(state.range(0));
    const std::size_t h = std::size_t(state.range(1));
    for (auto _ : state) {
        auto r = min_lamps_search(w, h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_min_lamps_search)->Args({4, 4})->Args({5, 5});

void BM_render_diamond(benchmark::State& state) {
    const Pattern d = mikado_diamond(std::size_t(state.range(0)));
    for (auto _ : state) {
        Bitmap b = render(d, RenderMode::lamps);
        benchmark::DoNotOptimize(b.pixels);
    }
}
BENCHMARK(BM_render_diamond)->Arg(8)->Arg(10);

} // namespace
