#include <benchmark/benchmark.h>

#include <random>

#include "pathrep/matrix_rep.hpp"

namespace {

using namespace pathrep;

MatrixRep random_rep(int rank, int max_dim, const PrimeField& field, std::mt19937& rng) {
    std::uniform_int_distribution<int> ddist(0, max_dim);
    std::uniform_int_distribution<unsigned> edist(0, field.modulus() - 1);
    std::vector<int> dims(static_cast<std::size_t>(rank));
    for (auto& d : dims) d = ddist(rng);
    std::vector<FpMatrix> arrows;
    for (int v = 1; v < rank; ++v) {
        FpMatrix m(field, dims[static_cast<std::size_t>(v)], dims[static_cast<std::size_t>(v - 1)]);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.set(r, c, edist(rng));
        arrows.push_back(std::move(m));
    }
    return MatrixRep(rank, std::move(dims), std::move(arrows), field);
}

void bm_hom_space_dim(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimeField f(5);
    std::mt19937 rng(42);
    const MatrixRep x = random_rep(n, 4, f, rng);
    const MatrixRep y = random_rep(n, 4, f, rng);
    for (auto _ : state) {
        int d = hom_space_dim(x, y);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_hom_space_dim)->Arg(4)->Arg(6)->Arg(8);

void bm_decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimeField f(2);
    std::mt19937 rng(7);
    const MatrixRep x = random_rep(n, 5, f, rng);
    for (auto _ : state) {
        Rep r = decompose(x);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_decompose)->Arg(4)->Arg(6)->Arg(8);

void bm_pullback(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimeField f(2);
    std::mt19937 rng(99);
    const MatrixRep y = random_rep(n, 4, f, rng);
    std::vector<unsigned> seed(static_cast<std::size_t>(y.dim_at(1)), 1u);
    const GeneratedSubrep sub = subrep_generated(y, 1, seed);
    const QuotientRep q = quotient_rep(sub.include);
    const Morphism h = Morphism::identity(q.quotient);
    for (auto _ : state) {
        PullbackResult pb = pullback(q.project, h);
        benchmark::DoNotOptimize(pb);
    }
}
BENCHMARK(bm_pullback)->Arg(4)->Arg(6);

void bm_split_exists(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimeField f(5);
    const Morphism inc = embed_middle_term(n, Interval(1, n - 1), Interval(2, n), f).value();
    for (auto _ : state) {
        bool s = split_exists(inc);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_split_exists)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
