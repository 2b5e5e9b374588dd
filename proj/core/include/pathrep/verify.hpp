#pragma once

#include <string>
#include <vector>

namespace pathrep {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // witness on failure, a short summary on success
};

/// Brute-force torsion enumeration equals the bracket-vector list, rank by
/// rank up to max_n.
SuiteResult verify_torsion_equivalence(int max_n, int jobs = 1);

/// Matrix oracle vs closed-form rules: hom_space_dim against hom_dim for all
/// interval pairs up to max_hom_n, and the split verdict on canonically
/// embedded middle terms / direct sums against ext_classify up to
/// max_split_n, over GF(prime).
SuiteResult verify_matrix_oracle(int max_hom_n, int max_split_n, unsigned prime);

/// encode(decode(a)) == a over all bracket vectors and decode(encode(s)) == s
/// over all balanced strings, plus Catalan counts, up to max_n.
SuiteResult verify_roundtrip(int max_n);

/// hasse(n) is isomorphic to rotation_lattice(n) up to max_n.
SuiteResult verify_lattice_isomorphism(int max_n);

/// Tilting counts, gen(T) starting with n, the tilting poset being
/// isomorphic to hasse(n-1), and the sincere drop-a_1 bijection, up to max_n.
SuiteResult verify_tilting_rs(int max_n);

/// Runs all suites at rank min(n, bound) each, with hard-coded per-suite
/// bounds {torsion 6, matrix 5 (split 4), roundtrip 8, lattice 7, tilting 6};
/// unsafe_n only ever raises a bound.
std::vector<SuiteResult> verify_all(int n, unsigned prime, int jobs, int unsafe_n);

}  // namespace pathrep
