#pragma once

#include <set>
#include <string>
#include <vector>

#include "pathrep/poset.hpp"
#include "pathrep/subcat.hpp"
#include "pathrep/tamari.hpp"

namespace pathrep {

/// Multiplicity-free tilting object of rep A_n: exactly n distinct interval
/// summands such that the nontrivial-extension rule fires for no ordered pair
/// of them (rigidity). Validated on construction.
class TiltingObject {
public:
    TiltingObject(int rank, std::set<Interval> summands);

    static bool is_rigid(int rank, const std::set<Interval>& summands);

    int rank() const { return rank_; }
    const std::set<Interval>& summands() const { return summands_; }

    bool operator==(const TiltingObject&) const = default;
    std::string to_string() const;  // "[[1,1],[1,2]]"

private:
    int rank_;
    std::set<Interval> summands_;
};

/// All tilting objects of rank n in lexicographic order of their summand
/// lists; there are Catalan(n) of them. Search is exhaustive over interval
/// subsets with rigidity pruning, practical for small n only.
std::vector<TiltingObject> enumerate_tilting(int n);

/// The quotient closure of x as an AVector. For a tilting object this is the
/// torsion class of modules generated by it; its first entry is always n.
AVector gen(const IntervalSet& x);

/// The tilting poset: T >= V iff gen(T) >= gen(V) componentwise (inclusion
/// of the generated torsion classes). Isomorphic to the Tamari lattice of
/// rank n-1.
Poset rs_poset(int n);

/// The bracket vectors of rank n with a_1 = n: the torsion classes that
/// contain every injective. Dropping a_1 is a bijection onto the bracket
/// vectors of rank n-1. Requires n >= 2.
std::vector<BracketVector> sincere_interval(int n);

}  // namespace pathrep
