#include <doctest.h>

#include <algorithm>

#include "pathrep/tilting.hpp"
#include "support/oracles.hpp"

using namespace pathrep;

TEST_SUITE("tilting") {

TEST_CASE("construction validates count and rigidity") {
    CHECK_NOTHROW(TiltingObject(2, {Interval(1, 1), Interval(1, 2)}));
    CHECK_THROWS_AS(TiltingObject(2, {Interval(1, 2)}), std::invalid_argument);
    // E^{11}, E^{22} admit a nontrivial extension.
    CHECK_THROWS_AS(TiltingObject(2, {Interval(1, 1), Interval(2, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(TiltingObject(2, {Interval(1, 1), Interval(1, 3)}), std::invalid_argument);
}

TEST_CASE("rigidity test") {
    CHECK(TiltingObject::is_rigid(2, {Interval(1, 1), Interval(1, 2)}));
    CHECK_FALSE(TiltingObject::is_rigid(2, {Interval(1, 1), Interval(2, 2)}));
    CHECK(TiltingObject::is_rigid(3, {Interval(1, 3), Interval(1, 1), Interval(1, 2)}));
    CHECK_FALSE(TiltingObject::is_rigid(3, {Interval(1, 3), Interval(1, 1), Interval(2, 2)}));
}

TEST_CASE("rank 2 enumeration is the two known objects") {
    const auto tilts = enumerate_tilting(2);
    REQUIRE(tilts.size() == 2);
    CHECK(tilts[0].summands() == std::set<Interval>{Interval(1, 1), Interval(1, 2)});
    CHECK(tilts[1].summands() == std::set<Interval>{Interval(1, 2), Interval(2, 2)});
    CHECK(tilts[0].to_string() == "[[1,1],[1,2]]");

    CHECK(gen(IntervalSet(2, tilts[0].summands())) == AVector({2, 0}));
    CHECK(gen(IntervalSet(2, tilts[1].summands())) == AVector({2, 1}));
}

TEST_CASE("counts, full interval membership, and sincere gen") {
    for (int n = 1; n <= 5; ++n) {
        const auto tilts = enumerate_tilting(n);
        CHECK(tilts.size() == testing::naive_catalan(n));
        for (const auto& t : tilts) {
            CHECK(t.summands().count(Interval(1, n)) == 1);
            CHECK(gen(IntervalSet(n, t.summands())).entry(1) == n);
        }
    }
}

TEST_CASE("gen is the avector of the quotient closure") {
    const IntervalSet x(3, {Interval(1, 3), Interval(2, 2)});
    CHECK(gen(x) == AVector({3, 1, 0}));
}

TEST_CASE("tilting poset is the Tamari lattice one rank down") {
    const Poset rs2 = rs_poset(2);
    REQUIRE(rs2.size() == 2);
    CHECK(rs2.covers == std::vector<std::pair<int, int>>{{0, 1}});
    for (int n = 2; n <= 5; ++n) CHECK(poset_isomorphic(rs_poset(n), hasse(n - 1)));
}

TEST_CASE("sincere classes drop to the lattice one rank down") {
    CHECK_THROWS_AS(sincere_interval(1), std::invalid_argument);
    for (int n = 2; n <= 5; ++n) {
        const auto sincere = sincere_interval(n);
        const auto lower = enumerate_bracket_vectors(n - 1);
        REQUIRE(sincere.size() == lower.size());
        std::vector<AVector> dropped;
        for (const auto& b : sincere) {
            CHECK(b.avector().entry(1) == n);
            dropped.emplace_back(std::vector<int>(b.avector().entries().begin() + 1,
                                                  b.avector().entries().end()));
        }
        std::sort(dropped.begin(), dropped.end());
        for (std::size_t k = 0; k < dropped.size(); ++k)
            CHECK(dropped[k] == lower[k].avector());
    }
}

}  // TEST_SUITE
