#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace pathrep {

/// The indecomposable representation E^{ij} of the linear path quiver
/// 1 -> 2 -> ... -> n: one-dimensional spaces on vertices i..j joined by
/// identity maps, zero elsewhere. Endpoints are 1-based and satisfy
/// 1 <= i <= j; the ambient rank bound j <= n is enforced wherever a rank
/// is in scope (require_in_rank, Rep, IntervalSet).
struct Interval {
    int lo;
    int hi;

    Interval(int lo, int hi);
    auto operator<=>(const Interval&) const = default;

    int length() const { return hi - lo + 1; }
    bool supports(int vertex) const { return lo <= vertex && vertex <= hi; }
    std::string to_string() const;  // "[i,j]"
};

/// Throws std::invalid_argument when the interval does not fit inside rank n.
void require_in_rank(const Interval& iv, int rank);

/// Formal direct sum of interval representations: a canonical multiset of
/// intervals (sorted, repeats encode multiplicity). The empty multiset is the
/// zero representation and is the unit for direct_sum.
class Rep {
public:
    explicit Rep(int rank, std::vector<Interval> summands = {});
    static Rep zero(int rank) { return Rep(rank); }

    int rank() const { return rank_; }
    const std::vector<Interval>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    std::vector<int> dim_vector() const;
    Rep direct_sum(const Rep& other) const;

    bool operator==(const Rep&) const = default;
    std::string to_string() const;  // "[[1,3],[2,2]]"

private:
    int rank_;
    std::vector<Interval> summands_;
};

/// dim Hom(E^{ij}, E^{kl}) over any field: 1 iff k <= i <= l <= j, else 0.
int hom_dim(const Interval& src, const Interval& dst, int rank);

/// Nontrivial-extension rule for Z = E^{ij} by X = E^{kl}: a nontrivial
/// extension exists iff i+1 <= k <= j+1 <= l, and then the middle term is
/// E^{il} (+) E^{kj}, where the second summand is absent when k = j+1.
/// Returns the middle term, or nullopt when every extension is trivial.
std::optional<Rep> ext_classify(const Interval& z, const Interval& x, int rank);

/// The set of quotient targets of E^{ij}: { E^{ip} : i <= p <= j }.
std::vector<Interval> quotients_of(const Interval& x);

/// Whether x has a summand E^{kj} with k = target.lo and j >= target.hi;
/// such a summand surjects onto the target through the chain of quotients,
/// and no other interval shape can.
bool surjects_onto(const Rep& x, const Interval& target);

}  // namespace pathrep
