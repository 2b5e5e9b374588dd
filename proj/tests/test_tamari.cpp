#include <doctest.h>

#include <algorithm>

#include "pathrep/tamari.hpp"
#include "support/oracles.hpp"

using namespace pathrep;

namespace {

BracketVector bv(std::vector<int> entries) { return BracketVector::checked(AVector(std::move(entries))); }

}  // namespace

TEST_SUITE("tamari") {

TEST_CASE("bracket string validation") {
    CHECK_NOTHROW(BracketString("()()"));
    CHECK(BracketString("(())").rank() == 1);
    CHECK(BracketString("(()())").rank() == 2);
    CHECK_THROWS_AS(BracketString("()"), std::invalid_argument);     // too short
    CHECK_THROWS_AS(BracketString("(()"), std::invalid_argument);    // odd length
    CHECK_THROWS_AS(BracketString("())("), std::invalid_argument);   // bad prefix
    CHECK_THROWS_AS(BracketString("(a)("), std::invalid_argument);   // alphabet
    CHECK_THROWS_AS(BracketString("))(("), std::invalid_argument);
}

TEST_CASE("bracket condition and its first violation") {
    CHECK(is_bracket_vector(AVector({0, 1})));
    CHECK(is_bracket_vector(AVector({2, 0})));
    CHECK(is_bracket_vector(AVector({2, 1})));
    CHECK_FALSE(is_bracket_vector(AVector({1, 1})));
    const auto v = bracket_violation(AVector({1, 1}));
    REQUIRE(v.has_value());
    CHECK(v->i == 1);
    CHECK(v->j == 1);

    CHECK(BracketVector::from(AVector({1, 1})) == std::nullopt);
    CHECK_THROWS_WITH_AS(BracketVector::checked(AVector({1, 1})),
                         "bracket condition fails at (i=1, j=1)", std::invalid_argument);
}

TEST_CASE("encode worked examples") {
    CHECK(encode(BracketString("()(())")) == bv({0, 1}));
    CHECK(encode(BracketString("(()())")) == bv({2, 0}));
    CHECK(encode(BracketString("((()))")) == bv({2, 1}));
    CHECK(encode(BracketString("()()")) == bv({0}));
    CHECK(encode(BracketString("(())")) == bv({1}));
}

TEST_CASE("decode worked examples") {
    CHECK(decode(bv({0, 1})).str() == "()(())");
    CHECK(decode(bv({2, 0})).str() == "(()())");
    CHECK(decode(bv({2, 1})).str() == "((()))");
    CHECK(decode(bv({0, 0})).str() == "()()()");
    CHECK(decode(bv({1, 0})).str() == "(())()");
}

TEST_CASE("roundtrip both ways up to rank 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        for (const auto& e : elems) CHECK(encode(decode(e)) == e);
        const auto strings = testing::all_balanced(n + 1);
        CHECK(strings.size() == elems.size());
        for (const auto& s : strings) {
            const BracketString b(s);
            CHECK(decode(encode(b)).str() == s);
        }
    }
}

TEST_CASE("enumeration counts Catalan(n+1) in lexicographic order") {
    for (int n = 1; n <= 8; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        CHECK(elems.size() == testing::naive_catalan(n + 1));
        CHECK(std::is_sorted(elems.begin(), elems.end()));
        // Filtering the full avector space gives the same list.
        if (n <= 5) {
            std::vector<BracketVector> filtered;
            for (const auto& a : enumerate_avectors(n))
                if (const auto b = BracketVector::from(a)) filtered.push_back(*b);
            CHECK(filtered.size() == elems.size());
            CHECK(std::equal(filtered.begin(), filtered.end(), elems.begin()));
        }
    }
}

TEST_CASE("componentwise order, bottom and top") {
    CHECK(leq(bv({0, 1}), bv({2, 1})));
    CHECK_FALSE(leq(bv({2, 0}), bv({0, 1})));
    for (int n = 1; n <= 5; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        const BracketVector bottom = bottom_vector(n);
        const BracketVector top = top_vector(n);
        for (const auto& e : elems) {
            CHECK(leq(bottom, e));
            CHECK(leq(e, top));
        }
    }
    CHECK_THROWS_AS(leq(bv({0}), bv({0, 0})), std::invalid_argument);
}

TEST_CASE("meet and join on the pentagon") {
    CHECK(meet(bv({1, 0}), bv({0, 1})) == bv({0, 0}));
    CHECK(join(bv({1, 0}), bv({0, 1})) == bv({2, 1}));
    CHECK(join(bv({0, 1}), bv({2, 0})) == bv({2, 1}));
    CHECK(meet(bv({2, 0}), bv({2, 1})) == bv({2, 0}));
    CHECK(join(bv({1, 0, 0}), bv({0, 2, 0})) == bv({3, 2, 0}));
    CHECK_THROWS_AS(meet(bv({0}), bv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(join(bv({0}), bv({0, 0})), std::invalid_argument);
}

TEST_CASE("meet and join agree with exhaustive bound search") {
    for (int n = 1; n <= 5; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                const BracketVector m = meet(a, b);
                const BracketVector j = join(a, b);
                CHECK(leq(m, a));
                CHECK(leq(m, b));
                CHECK(leq(a, j));
                CHECK(leq(b, j));
                for (const auto& c : elems) {
                    if (leq(c, a) && leq(c, b)) CHECK(leq(c, m));
                    if (leq(a, c) && leq(b, c)) CHECK(leq(j, c));
                }
            }
        }
    }
}

TEST_CASE("lattice laws hold exhaustively for small ranks") {
    for (int n = 1; n <= 4; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        for (const auto& a : elems) {
            CHECK(meet(a, a) == a);
            CHECK(join(a, a) == a);
            for (const auto& b : elems) {
                CHECK(meet(a, b) == meet(b, a));
                CHECK(join(a, b) == join(b, a));
                CHECK(meet(a, join(a, b)) == a);
                CHECK(join(a, meet(a, b)) == a);
                for (const auto& c : elems) {
                    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
                    CHECK(join(join(a, b), c) == join(a, join(b, c)));
                }
            }
        }
    }
}

TEST_CASE("hasse of rank 2 is the pentagon") {
    const Poset p = hasse(2);
    REQUIRE(p.size() == 5);
    CHECK(p.labels == std::vector<std::string>{"0,0", "0,1", "1,0", "2,0", "2,1"});
    CHECK(p.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
}

TEST_CASE("cover counts across ranks") {
    for (int n = 1; n <= 6; ++n) {
        const Poset p = hasse(n);
        const std::uint64_t elems = testing::naive_catalan(n + 1);
        CHECK(p.covers.size() == static_cast<std::uint64_t>(n) * elems / 2);
    }
}

}  // TEST_SUITE
