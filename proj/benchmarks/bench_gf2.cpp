#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "lamplight/gf2.hpp"

namespace {

using namespace lamplight;

GF2Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GF2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() & 1u) m.set(r, c, true);
    return m;
}

void BM_rref(benchmark::State& state) {
    const GF2Matrix m = random_matrix(std::size_t(state.range(0)), 7);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rref)->Arg(64)->Arg(256)->Arg(512);

void BM_solve(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    const GF2Matrix m = random_matrix(n, 11);
    const GF2Vector b = GF2Vector::ones(n);
    for (auto _ : state) {
        auto x = solve(m, b);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_solve)->Arg(64)->Arg(256)->Arg(512);

void BM_det_mod2(benchmark::State& state) {
    const GF2Matrix m = random_matrix(std::size_t(state.range(0)), 13);
    for (auto _ : state) {
        int d = det_mod2(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_det_mod2)->Arg(256)->Arg(512);

} // namespace

BENCHMARK_MAIN();
