#include "mgc/bridge.hpp"
#include "mgc/harness.hpp"

#include <benchmark/benchmark.h>

using namespace mgc;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int n) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = static_cast<int>(rng() % 7) - 3;
    return m;
}

void bm_reduce(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Matrix m = random_matrix(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reduce(m));
}
BENCHMARK(bm_reduce)->Arg(16)->Arg(32)->Arg(64);

void bm_homology(benchmark::State& state) {
    GenConfig cfg;
    cfg.max_dim = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    ChainComplex c = gen_chain(rng, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}
BENCHMARK(bm_homology)->Arg(4)->Arg(8)->Arg(16);

void bm_realization(benchmark::State& state) {
    GenConfig cfg;
    std::mt19937_64 rng(3);
    MixedComplex m = gen_mixed(rng, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(realization(m));
}
BENCHMARK(bm_realization);

void bm_to_filtered(benchmark::State& state) {
    GenConfig cfg;
    std::mt19937_64 rng(4);
    MixedComplex m = gen_mixed(rng, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(to_filtered(m));
}
BENCHMARK(bm_to_filtered);

void bm_tensor_fil(benchmark::State& state) {
    GenConfig cfg;
    std::mt19937_64 rng(5);
    FilteredComplex a = gen_filtered(rng, cfg, false);
    FilteredComplex b = gen_filtered(rng, cfg, false);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_fil(a, b));
}
BENCHMARK(bm_tensor_fil);

} // namespace

BENCHMARK_MAIN();
