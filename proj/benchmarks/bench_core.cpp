#include <benchmark/benchmark.h>

#include "detmor/ar.hpp"
#include "detmor/category.hpp"
#include "detmor/determined.hpp"
#include "detmor/tube.hpp"

using namespace detmor;

static void BM_tube_hom_basis(benchmark::State& state) {
    auto x = tube::jordan_object(2, {4, 3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(tube::hom_basis(x, x));
}
BENCHMARK(BM_tube_hom_basis);

static void BM_tube_ext1(benchmark::State& state) {
    auto x = tube::jordan_object(2, {4, 2});
    auto y = tube::jordan_object(2, {3, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(tube::ext1(x, y));
}
BENCHMARK(BM_tube_ext1);

static void BM_quiver_tau(benchmark::State& state) {
    auto q = quiver::linear_an(4);
    auto s = quiver::simple_at(q, 2, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ar::tau(s));
}
BENCHMARK(BM_quiver_tau);

static void BM_submodule_enumeration(benchmark::State& state) {
    TubeCat cat{2};
    auto j3 = tube::jordan_block(2, 3);
    auto gm = gamma_module(cat, j3, j3);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_submodules(cat, gm));
}
BENCHMARK(BM_submodule_enumeration);

static void BM_bijection_table(benchmark::State& state) {
    TubeCat cat{2};
    auto j2 = tube::jordan_block(2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(auslander_table(cat, j2, j2, 5));
}
BENCHMARK(BM_bijection_table);

BENCHMARK_MAIN();
