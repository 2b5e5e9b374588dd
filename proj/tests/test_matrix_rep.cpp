#include <doctest.h>

#include <random>

#include "pathrep/matrix_rep.hpp"
#include "support/oracles.hpp"

using namespace pathrep;

namespace {

bool composes_to_zero(const Morphism& second, const Morphism& first) {
    for (int v = 1; v <= first.source().rank(); ++v)
        if (!second.block(v).multiply(first.block(v)).is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("matrix_rep") {

TEST_CASE("interval representations have identity arrows on their support") {
    const PrimeField f(2);
    const MatrixRep e23 = MatrixRep::interval(3, Interval(2, 3), f);
    CHECK(e23.dims() == std::vector<int>{0, 1, 1});
    CHECK(e23.arrow_map(1).rows() == 1);
    CHECK(e23.arrow_map(1).cols() == 0);
    CHECK(e23.arrow_map(2).at(0, 0) == 1);
    CHECK(e23.total_dim() == 2);
    CHECK(e23.composed_map(2, 3).at(0, 0) == 1);
}

TEST_CASE("constructor validates shapes") {
    const PrimeField f(3);
    CHECK_THROWS_AS(MatrixRep(2, {1}, {FpMatrix(f, 1, 1)}, f), std::invalid_argument);
    CHECK_THROWS_AS(MatrixRep(2, {1, 1}, {}, f), std::invalid_argument);
    CHECK_THROWS_AS(MatrixRep(2, {1, 1}, {FpMatrix(f, 2, 1)}, f), std::invalid_argument);
    CHECK_THROWS_AS(MatrixRep(2, {1, -1}, {FpMatrix(f, 1, 1)}, f), std::invalid_argument);
    CHECK_NOTHROW(MatrixRep(2, {1, 1}, {FpMatrix(f, 1, 1)}, f));
}

TEST_CASE("direct_sum and of_rep") {
    const PrimeField f(5);
    const Rep formal(3, {Interval(1, 2), Interval(2, 3)});
    const MatrixRep x = MatrixRep::of_rep(formal, f);
    CHECK(x.dims() == formal.dim_vector());
    CHECK(decompose(x) == formal);
}

TEST_CASE("morphism constructor enforces commutation") {
    const PrimeField f(2);
    const MatrixRep e12 = MatrixRep::interval(2, Interval(1, 2), f);
    const MatrixRep e11 = MatrixRep::interval(2, Interval(1, 1), f);

    // E^{12} ->> E^{11} is fine; the other direction admits only zero.
    FpMatrix one(f, 1, 1);
    one.set(0, 0, 1);
    CHECK_NOTHROW(Morphism(e12, e11, {one, FpMatrix(f, 0, 1)}));
    CHECK_THROWS_AS(Morphism(e11, e12, {one, FpMatrix(f, 1, 0)}), std::invalid_argument);
    CHECK_NOTHROW(Morphism::zero(e11, e12));
    CHECK_NOTHROW(Morphism::identity(e12));

    CHECK_THROWS_AS(Morphism(e12, e11, {one}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(e12, e11, {one, FpMatrix(f, 1, 1)}), std::invalid_argument);
}

TEST_CASE("hom_basis yields the dimension and valid morphisms") {
    const PrimeField f(5);
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const MatrixRep src = MatrixRep::interval(n, Interval(i, j), f);
                for (int k = 1; k <= n; ++k)
                    for (int l = k; l <= n; ++l) {
                        const MatrixRep dst = MatrixRep::interval(n, Interval(k, l), f);
                        const auto basis = hom_basis(src, dst);
                        CHECK(static_cast<int>(basis.size()) == hom_space_dim(src, dst));
                    }
            }
}

TEST_CASE("subrep_generated walks rightward from the seed") {
    const PrimeField f(3);
    const MatrixRep e13 = MatrixRep::interval(3, Interval(1, 3), f);
    const std::vector<unsigned> seed{1};
    const GeneratedSubrep got = subrep_generated(e13, 2, seed);
    CHECK(decompose(got.sub) == Rep(3, {Interval(2, 3)}));
    CHECK(got.include.injective());

    // Quotient by it leaves the part left of the seed.
    const QuotientRep q = quotient_rep(got.include);
    CHECK(decompose(q.quotient) == Rep(3, {Interval(1, 1)}));
    CHECK(q.project.surjective());

    // A zero seed generates the zero subrepresentation.
    const std::vector<unsigned> zero_seed{0};
    CHECK(subrep_generated(e13, 2, zero_seed).sub.total_dim() == 0);

    // A seed killed by the next arrow stops immediately.
    const MatrixRep two = MatrixRep::of_rep(Rep(2, {Interval(1, 1), Interval(1, 2)}), f);
    const std::vector<unsigned> dies{1, 0};
    const GeneratedSubrep short_run = subrep_generated(two, 1, dies);
    CHECK(decompose(short_run.sub) == Rep(2, {Interval(1, 1)}));
}

TEST_CASE("split_exists separates trivial from nontrivial extensions") {
    for (const unsigned p : {2u, 5u}) {
        const PrimeField f(p);
        CHECK(split_exists(embed_direct_sum(2, Interval(1, 1), Interval(2, 2), f)));

        const auto mid = embed_middle_term(2, Interval(1, 1), Interval(2, 2), f);
        REQUIRE(mid.has_value());
        CHECK(decompose(mid->target()) == Rep(2, {Interval(1, 2)}));
        CHECK_FALSE(split_exists(*mid));

        // Direct-sum middle term, still a nonsplit inclusion.
        const auto mid3 = embed_middle_term(3, Interval(1, 2), Interval(2, 3), f);
        REQUIRE(mid3.has_value());
        CHECK(decompose(mid3->target()) == Rep(3, {Interval(1, 3), Interval(2, 2)}));
        CHECK_FALSE(split_exists(*mid3));

        CHECK_FALSE(embed_middle_term(2, Interval(2, 2), Interval(1, 1), f).has_value());
    }
    const PrimeField f2(2);
    CHECK_THROWS_AS(
        split_exists(Morphism::zero(MatrixRep::interval(2, Interval(1, 1), f2),
                                    MatrixRep::interval(2, Interval(1, 2), f2))),
        std::invalid_argument);
}

TEST_CASE("quotient and kernel of a surjection") {
    const PrimeField f(5);
    const MatrixRep e12 = MatrixRep::interval(2, Interval(1, 2), f);
    const MatrixRep e11 = MatrixRep::interval(2, Interval(1, 1), f);
    FpMatrix one(f, 1, 1);
    one.set(0, 0, 1);
    const Morphism g(e12, e11, {one, FpMatrix(f, 0, 1)});
    CHECK(g.surjective());

    const KernelRep k = kernel_rep(g);
    CHECK(decompose(k.kernel) == Rep(2, {Interval(2, 2)}));
    CHECK(k.include.injective());
    CHECK(composes_to_zero(g, k.include));

    const QuotientRep q = quotient_rep(k.include);
    CHECK(decompose(q.quotient) == Rep(2, {Interval(1, 1)}));
}

TEST_CASE("pullback along the identity reproduces the source") {
    const PrimeField f(2);
    const MatrixRep e12 = MatrixRep::interval(2, Interval(1, 2), f);
    const MatrixRep e11 = MatrixRep::interval(2, Interval(1, 1), f);
    FpMatrix one(f, 1, 1);
    one.set(0, 0, 1);
    const Morphism g(e12, e11, {one, FpMatrix(f, 0, 1)});
    const Morphism h = Morphism::identity(e11);

    const PullbackResult pb = pullback(g, h);
    CHECK(pb.total.dims() == std::vector<int>{1, 1});
    CHECK(decompose(pb.total) == decompose(e12));
    CHECK(pb.include_x.injective());
    CHECK(pb.onto_zprime.surjective());
    CHECK(pb.onto_y.surjective());
    CHECK(composes_to_zero(pb.onto_zprime, pb.include_x));
    for (int v = 1; v <= 2; ++v) {
        const int nullity = pb.onto_zprime.block(v).nullspace().cols();
        CHECK(nullity == pb.include_x.source().dim_at(v));
    }

    // Mismatched targets are rejected.
    const MatrixRep e22 = MatrixRep::interval(2, Interval(2, 2), f);
    CHECK_THROWS_AS(pullback(g, Morphism::identity(e22)), std::invalid_argument);
}

TEST_CASE("pullback rejects non-surjective inputs") {
    const PrimeField f(2);
    const MatrixRep e12 = MatrixRep::interval(2, Interval(1, 2), f);
    const MatrixRep e11 = MatrixRep::interval(2, Interval(1, 1), f);
    const Morphism z = Morphism::zero(e12, e11);
    CHECK_THROWS_AS(pullback(z, Morphism::identity(e11)), std::invalid_argument);
}

TEST_CASE("decompose on hand-built representations") {
    const PrimeField f(2);
    // Two vertices, zero arrow: simples at both ends.
    CHECK(decompose(MatrixRep(2, {1, 1}, {FpMatrix(f, 1, 1)}, f)) ==
          Rep(2, {Interval(1, 1), Interval(2, 2)}));
    // Identity arrow: one long interval.
    FpMatrix one(f, 1, 1);
    one.set(0, 0, 1);
    CHECK(decompose(MatrixRep(2, {1, 1}, {one}, f)) == Rep(2, {Interval(1, 2)}));
    CHECK(decompose(MatrixRep::zero(3, f)) == Rep::zero(3));
}

TEST_CASE("decompose inverts of_rep on random formal sums") {
    std::mt19937 rng(987123);
    const PrimeField f(3);
    const int n = 4;
    std::vector<Interval> all;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) all.emplace_back(i, j);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> count(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Interval> parts;
        const int k = count(rng);
        for (int t = 0; t < k; ++t) parts.push_back(all[pick(rng)]);
        const Rep formal(n, parts);
        CHECK(decompose(MatrixRep::of_rep(formal, f)) == formal);
    }
}

TEST_CASE("decompose reconstructs the dimension vector of random representations") {
    std::mt19937 rng(55221);
    const PrimeField f(2);
    for (int trial = 0; trial < 100; ++trial) {
        const MatrixRep x = testing::random_rep(4, 3, f, rng);
        CHECK(decompose(x).dim_vector() == x.dims());
    }
}

}  // TEST_SUITE
