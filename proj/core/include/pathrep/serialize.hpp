#pragma once

#include <string>
#include <vector>

#include "pathrep/matrix_rep.hpp"
#include "pathrep/poset.hpp"
#include "pathrep/tamari.hpp"
#include "pathrep/tilting.hpp"

namespace pathrep {

/// JSON for the Tamari lattice:
/// { "n": int, "elements": [ { "id": int, "a": [ints], "bracket": string } ],
///   "covers": [[lowerId, upperId]] }
/// Elements must be the lexicographic bracket-vector list matching the poset.
std::string tamari_poset_json(int n, const std::vector<BracketVector>& elements, const Poset& p);

/// DOT digraph with one edge per cover (lower -> upper) and the bracket
/// string as node label.
std::string tamari_poset_dot(int n, const std::vector<BracketVector>& elements, const Poset& p);

/// JSON for the tilting poset; elements carry their summand lists and gen
/// vectors instead of bracket data:
/// { "n": int, "elements": [ { "id": int, "summands": [[i,j]], "gen": [ints] } ],
///   "covers": [[lowerId, upperId]] }
std::string rs_poset_json(int n, const std::vector<TiltingObject>& elements, const Poset& p);

/// Generic DOT digraph using the poset's own labels.
std::string poset_dot(const Poset& p, const std::string& name);

/// JSON fixture form of a concrete representation:
/// { "n": int, "p": int, "dims": [ints], "maps": [row-major entry lists] }
std::string matrix_rep_json(const MatrixRep& x);

}  // namespace pathrep
