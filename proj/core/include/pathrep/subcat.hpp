#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathrep/interval.hpp"

namespace pathrep {

/// n-tuple (a_1, ..., a_n) with 0 <= a_i <= n+1-i. Each such vector indexes
/// the quotient-closed subcategory whose indecomposables are the intervals
/// [i, j] with i <= j < i + a_i; there are (n+1)! of them in total.
class AVector {
public:
    explicit AVector(std::vector<int> entries);

    int rank() const { return static_cast<int>(a_.size()); }
    /// 1-based entry a_i; returns 0 for i > rank() (the standard convention).
    int entry(int i) const;
    const std::vector<int>& entries() const { return a_; }

    auto operator<=>(const AVector&) const = default;

    std::string to_string() const;  // "2,1"
    static AVector parse(const std::string& text);

private:
    std::vector<int> a_;
};

/// A set of intervals inside rep A_n: the indecomposables of a full additive
/// subcategory. Membership is canonical (ordered set).
class IntervalSet {
public:
    explicit IntervalSet(int rank, std::set<Interval> members = {});

    int rank() const { return rank_; }
    const std::set<Interval>& members() const { return members_; }
    bool contains(const Interval& iv) const { return members_.count(iv) > 0; }
    std::size_t size() const { return members_.size(); }

    bool operator==(const IntervalSet&) const = default;
    std::string to_string() const;  // "[[1,1],[2,2]]"

private:
    int rank_;
    std::set<Interval> members_;
};

/// The interval set { [i, j] : i <= j < i + a_i } indexed by an AVector.
IntervalSet f_set(const AVector& a);

/// Inverse of f_set on its image: the AVector whose f_set is s, or nullopt
/// when s is not left-saturated (some [i, j] in s without all [i, p], p < j).
std::optional<AVector> avector_of(const IntervalSet& s);

/// Whether s is closed under passing to quotients of its members.
bool is_quotient_closed(const IntervalSet& s);

/// Closure of s under quotients: adds every E^{ip} for each member E^{ij}.
IntervalSet quotient_closure(const IntervalSet& s);

/// One extension round: adds both middle-term summands of every ordered pair
/// (Z, X) in s x s for which the nontrivial-extension rule fires.
IntervalSet extension_step(const IntervalSet& s);

/// Least fixpoint of quotient_closure and extension_step containing s.
IntervalSet torsion_closure(const IntervalSet& s);

/// Whether s is a torsion class: closed under quotients and extensions.
bool is_torsion(const IntervalSet& s);

/// All (n+1)! AVectors of rank n in lexicographic order.
std::vector<AVector> enumerate_avectors(int n);

/// Brute-force torsion-class enumeration: filters every AVector a by
/// is_torsion(f_set(a)). With jobs > 1 the index range is partitioned across
/// threads and the per-chunk results are concatenated in chunk order, so the
/// output is identical to the single-threaded run (lexicographic).
std::vector<AVector> enumerate_torsion_brute(int n, int jobs = 1);

}  // namespace pathrep
