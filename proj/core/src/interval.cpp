#include "pathrep/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pathrep {

Interval::Interval(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("Interval: endpoints must satisfy 1 <= i <= j");
}

std::string Interval::to_string() const {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

void require_in_rank(const Interval& iv, int rank) {
    if (iv.hi > rank)
        throw std::invalid_argument("interval " + iv.to_string() + " does not fit inside rank " +
                                    std::to_string(rank));
}

Rep::Rep(int rank, std::vector<Interval> summands) : rank_(rank), summands_(std::move(summands)) {
    if (rank_ < 1) throw std::invalid_argument("Rep: rank must be >= 1");
    for (const auto& iv : summands_) require_in_rank(iv, rank_);
    std::sort(summands_.begin(), summands_.end());
}

std::vector<int> Rep::dim_vector() const {
    std::vector<int> d(static_cast<std::size_t>(rank_), 0);
    for (const auto& iv : summands_)
        for (int v = iv.lo; v <= iv.hi; ++v) ++d[static_cast<std::size_t>(v - 1)];
    return d;
}

Rep Rep::direct_sum(const Rep& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("Rep::direct_sum: rank mismatch");
    std::vector<Interval> all = summands_;
    all.insert(all.end(), other.summands_.begin(), other.summands_.end());
    return Rep(rank_, std::move(all));
}

std::string Rep::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < summands_.size(); ++k)
        os << (k == 0 ? "" : ",") << summands_[k].to_string();
    os << "]";
    return os.str();
}

int hom_dim(const Interval& src, const Interval& dst, int rank) {
    require_in_rank(src, rank);
    require_in_rank(dst, rank);
    return (dst.lo <= src.lo && src.lo <= dst.hi && dst.hi <= src.hi) ? 1 : 0;
}

std::optional<Rep> ext_classify(const Interval& z, const Interval& x, int rank) {
    require_in_rank(z, rank);
    require_in_rank(x, rank);
    if (!(z.lo + 1 <= x.lo && x.lo <= z.hi + 1 && z.hi + 1 <= x.hi)) return std::nullopt;
    std::vector<Interval> middle;
    middle.emplace_back(z.lo, x.hi);
    if (x.lo <= z.hi) middle.emplace_back(x.lo, z.hi);  // absent exactly when x.lo == z.hi + 1
    return Rep(rank, std::move(middle));
}

std::vector<Interval> quotients_of(const Interval& x) {
    std::vector<Interval> out;
    out.reserve(static_cast<std::size_t>(x.length()));
    for (int p = x.lo; p <= x.hi; ++p) out.emplace_back(x.lo, p);
    return out;
}

bool surjects_onto(const Rep& x, const Interval& target) {
    require_in_rank(target, x.rank());
    for (const auto& s : x.summands())
        if (s.lo == target.lo && s.hi >= target.hi) return true;
    return false;
}

}  // namespace pathrep
