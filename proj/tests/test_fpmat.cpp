#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pathrep/fpmat.hpp"

using namespace pathrep;

TEST_SUITE("fpmat") {

TEST_CASE("field construction accepts primes only") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(7));
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    const PrimeField f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.neg(2) == 3);
    CHECK(f.neg(0) == 0);
    CHECK(f.reduce(-7) == 3);
    for (unsigned a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("identity and multiply") {
    const PrimeField f(7);
    const FpMatrix id = FpMatrix::identity(f, 3);
    FpMatrix a(f, 3, 2);
    a.set(0, 0, 1);
    a.set(1, 1, 4);
    a.set(2, 0, 6);
    CHECK(id.multiply(a) == a);
    CHECK(a.multiply(FpMatrix::identity(f, 2)) == a);

    FpMatrix b(f, 2, 2);
    b.set(0, 0, 2);
    b.set(0, 1, 3);
    b.set(1, 0, 5);
    const FpMatrix ab = a.multiply(b);
    CHECK(ab.at(0, 0) == 2);
    CHECK(ab.at(0, 1) == 3);
    CHECK(ab.at(1, 0) == 6);  // 4*5 mod 7
    CHECK(ab.at(2, 0) == 5);  // 6*2 mod 7
    CHECK(ab.at(2, 1) == 4);  // 6*3 mod 7
}

TEST_CASE("rank and nullspace on a known matrix") {
    const PrimeField f(5);
    const FpMatrix a = FpMatrix::from_rows(f, {{1, 0, 2}, {0, 3, 1}, {1, 1, 0}});
    CHECK(a.rank() == 3);  // det = -7, nonzero mod 5
    const FpMatrix singular = FpMatrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    CHECK(singular.rank() == 2);
    const FpMatrix ns = singular.nullspace();
    CHECK(ns.cols() == 1);
    CHECK(singular.multiply(ns).is_zero());
}

TEST_CASE("rank over GF(2) differs from the rational rank") {
    const PrimeField f(2);
    // Determinant 2: invertible over the rationals, singular mod 2.
    const FpMatrix a = FpMatrix::from_rows(f, {{1, 1}, {1, 3}});
    CHECK(a.rank() == 1);
}

TEST_CASE("solve and solve_matrix") {
    const PrimeField f(7);
    const FpMatrix a = FpMatrix::from_rows(f, {{2, 1}, {1, 3}});
    const std::vector<unsigned> b{5, 4};
    const auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);

    const FpMatrix inconsistent = FpMatrix::from_rows(f, {{1, 1}, {2, 2}});
    CHECK_FALSE(inconsistent.solve(std::vector<unsigned>{1, 3}).has_value());
    CHECK(inconsistent.solve(std::vector<unsigned>{1, 2}).has_value());

    const FpMatrix rhs = FpMatrix::from_rows(f, {{1, 0}, {0, 1}});
    const auto sol = a.solve_matrix(rhs);
    REQUIRE(sol.has_value());
    CHECK(a.multiply(*sol) == rhs);
}

TEST_CASE("inverse") {
    const PrimeField f(5);
    const FpMatrix a = FpMatrix::from_rows(f, {{1, 2}, {3, 4}});
    const auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a.multiply(*inv) == FpMatrix::identity(f, 2));
    CHECK(inv->multiply(a) == FpMatrix::identity(f, 2));
    const FpMatrix singular = FpMatrix::from_rows(f, {{1, 2}, {2, 4}});
    CHECK_FALSE(singular.inverse().has_value());
    CHECK_THROWS_AS(FpMatrix(f, 2, 3).inverse(), std::invalid_argument);
}

TEST_CASE("empty shapes are first-class") {
    const PrimeField f(3);
    const FpMatrix none(f, 0, 3);
    CHECK(none.rank() == 0);
    CHECK(none.nullspace().cols() == 3);  // everything is in the kernel
    const FpMatrix tall(f, 3, 0);
    CHECK(tall.rank() == 0);
    CHECK(tall.nullspace().cols() == 0);
    CHECK(none.multiply(tall).rows() == 0);
    CHECK(tall.multiply(none).rows() == 3);
    CHECK(tall.multiply(none).is_zero());
    CHECK(FpMatrix::identity(f, 0).rows() == 0);
    CHECK(none.to_string() == "[]");

    // Solving the empty system: 0 = b decides consistency entrywise.
    CHECK(tall.solve(std::vector<unsigned>{0, 0, 0}).has_value());
    CHECK_FALSE(tall.solve(std::vector<unsigned>{0, 1, 0}).has_value());
}

TEST_CASE("block_diag, augment, stack, take_rows, negate") {
    const PrimeField f(5);
    const FpMatrix a = FpMatrix::from_rows(f, {{1, 2}});
    const FpMatrix b = FpMatrix::from_rows(f, {{3}, {4}});
    const FpMatrix d = FpMatrix::block_diag(a, b);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 3);
    CHECK(d.at(0, 1) == 2);
    CHECK(d.at(1, 2) == 3);
    CHECK(d.at(2, 2) == 4);
    CHECK(d.at(0, 2) == 0);

    CHECK(FpMatrix::block_diag(FpMatrix(f, 0, 0), a) == a);

    const FpMatrix aug = a.augment_cols(FpMatrix::from_rows(f, {{4, 0}}));
    CHECK(aug.cols() == 4);
    CHECK(aug.at(0, 2) == 4);

    const FpMatrix stacked = b.stack_rows(FpMatrix::from_rows(f, {{1}}));
    CHECK(stacked.rows() == 3);
    CHECK(stacked.at(2, 0) == 1);
    CHECK(stacked.take_rows(1, 3).at(0, 0) == 4);

    CHECK(a.negate().at(0, 0) == 4);
    CHECK(a.negate().at(0, 1) == 3);
}

TEST_CASE("to_string") {
    const PrimeField f(3);
    CHECK(FpMatrix::identity(f, 2).to_string() == "[[1,0],[0,1]]");
}

TEST_CASE("randomized rank-nullity and solve consistency") {
    std::mt19937 rng(20240817);
    const PrimeField f(5);
    std::uniform_int_distribution<int> shape(0, 5);
    std::uniform_int_distribution<unsigned> entry(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = shape(rng);
        const int cols = shape(rng);
        FpMatrix a(f, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.set(r, c, entry(rng));

        const FpMatrix ns = a.nullspace();
        CHECK(a.rank() + ns.cols() == cols);
        CHECK(a.multiply(ns).is_zero());
        CHECK(ns.rank() == ns.cols());  // basis columns are independent

        // A right-hand side built from a known solution is always consistent.
        std::vector<unsigned> x0(static_cast<std::size_t>(cols));
        for (auto& v : x0) v = entry(rng);
        const auto sol = a.solve(a.apply(x0));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(x0));
    }
}

}  // TEST_SUITE
