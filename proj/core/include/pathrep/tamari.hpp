#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pathrep/poset.hpp"
#include "pathrep/subcat.hpp"

namespace pathrep {

/// Balanced parenthesis string of length 2n+2 with n >= 1; every prefix has
/// at least as many '(' as ')'. Validated on construction.
class BracketString {
public:
    explicit BracketString(std::string s);

    const std::string& str() const { return s_; }
    int rank() const { return static_cast<int>(s_.size()) / 2 - 1; }

    bool operator==(const BracketString&) const = default;

private:
    std::string s_;
};

/// The failed instance (1-based i, j) of the bracket condition.
struct BracketViolation {
    int i;
    int j;
};

/// Bracket condition: for all 1 <= i <= n and 1 <= j <= a_i,
/// j + a_{i+j} <= a_i (with a_k = 0 for k > n). Returns the first violation
/// in lexicographic (i, j) order, or nullopt.
std::optional<BracketViolation> bracket_violation(const AVector& a);
bool is_bracket_vector(const AVector& a);

/// An AVector satisfying the bracket condition. These index exactly the
/// torsion classes of rep A_n, and componentwise order on them is the Tamari
/// lattice: bottom (0,...,0), top (n, n-1, ..., 1).
class BracketVector {
public:
    static std::optional<BracketVector> from(const AVector& a);
    /// Throws std::invalid_argument naming the violated (i, j) pair.
    static BracketVector checked(const AVector& a);

    const AVector& avector() const { return a_; }
    int rank() const { return a_.rank(); }

    auto operator<=>(const BracketVector&) const = default;
    std::string to_string() const { return a_.to_string(); }

private:
    explicit BracketVector(AVector a) : a_(std::move(a)) {}
    AVector a_;
};

/// For each '(' in left-to-right order, the number of '(' strictly between
/// it and its matching ')'; the final count (always 0) is dropped.
BracketVector encode(const BracketString& s);

/// The unique balanced string with encode(decode(a)) == a, constructed
/// recursively: the group opened by position i nests the next a_i groups.
BracketString decode(const BracketVector& a);

/// All bracket vectors of rank n in lexicographic order; there are
/// Catalan(n+1) of them.
std::vector<BracketVector> enumerate_bracket_vectors(int n);

/// Componentwise order; a <= b means torsion class a is contained in b.
bool leq(const BracketVector& a, const BracketVector& b);

/// Componentwise minimum (bracket vectors are closed under it).
BracketVector meet(const BracketVector& a, const BracketVector& b);

/// Least upper bound by violation repair: starting from the componentwise
/// maximum, raise a_i to j + a_{i+j} while some instance of the bracket
/// condition fails. Entries only grow and stay within the AVector bounds,
/// so the repair terminates; no upper bound is ever overshot.
BracketVector join(const BracketVector& a, const BracketVector& b);

BracketVector bottom_vector(int n);  // (0, ..., 0)
BracketVector top_vector(int n);     // (n, n-1, ..., 1)

/// The Tamari lattice of rank n: elements are the bracket vectors in
/// lexicographic order (labels are their serializations), covers by
/// transitive reduction of componentwise order.
Poset hasse(int n);

}  // namespace pathrep
