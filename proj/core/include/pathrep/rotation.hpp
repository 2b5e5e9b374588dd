#pragma once

#include "pathrep/poset.hpp"

namespace pathrep {

/// The rotation lattice of binary trees with n+1 internal nodes: covers are
/// single right rotations ((A B) C) -> (A (B C)). Labels serialize a tree as
/// "" for a leaf and "(" + left + ")" + right for an internal node, and the
/// element list is sorted by label. Built independently of the bracket-vector
/// order; the two are compared only through poset_isomorphic.
Poset rotation_lattice(int n);

}  // namespace pathrep
