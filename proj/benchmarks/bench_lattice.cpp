#include <benchmark/benchmark.h>

#include "pathrep/rotation.hpp"
#include "pathrep/subcat.hpp"
#include "pathrep/tamari.hpp"

namespace {

using namespace pathrep;

void bm_enumerate_bracket(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto elems = enumerate_bracket_vectors(n);
        benchmark::DoNotOptimize(elems);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(enumerate_bracket_vectors(n).size()));
}
BENCHMARK(bm_enumerate_bracket)->Arg(6)->Arg(8)->Arg(10);

void bm_torsion_brute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto elems = enumerate_torsion_brute(n, jobs);
        benchmark::DoNotOptimize(elems);
    }
}
BENCHMARK(bm_torsion_brute)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Args({6, 4});

void bm_hasse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = hasse(n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_hasse)->Arg(4)->Arg(5)->Arg(6);

void bm_rotation_isomorphism(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Poset torsion = hasse(n);
    const Poset rotation = rotation_lattice(n);
    for (auto _ : state) {
        bool iso = poset_isomorphic(torsion, rotation);
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(bm_rotation_isomorphism)->Arg(5)->Arg(6);

void bm_join_all_pairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto elems = enumerate_bracket_vectors(n);
    for (auto _ : state) {
        for (const auto& a : elems)
            for (const auto& b : elems) {
                auto j = join(a, b);
                benchmark::DoNotOptimize(j);
            }
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(elems.size() * elems.size()));
}
BENCHMARK(bm_join_all_pairs)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
