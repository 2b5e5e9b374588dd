#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pathrep {

/// Finite poset presented by its Hasse diagram: a canonically ordered element
/// list plus the cover relation as sorted (lower, upper) index pairs.
struct Poset {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;

    int size() const { return static_cast<int>(labels.size()); }
};

/// Builds a poset from a partial order on label indices; covers are computed
/// by generic transitive reduction. The labels are kept in the given order,
/// which is expected to be the canonical one for the elements at hand.
Poset make_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);

/// Directed isomorphism of Hasse diagrams, decided by iterated color
/// refinement over up/down cover neighborhoods with backtracking on ties.
bool poset_isomorphic(const Poset& p, const Poset& q);

}  // namespace pathrep
