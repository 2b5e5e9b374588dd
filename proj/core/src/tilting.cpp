#include "pathrep/tilting.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathrep {

TiltingObject::TiltingObject(int rank, std::set<Interval> summands)
    : rank_(rank), summands_(std::move(summands)) {
    if (rank_ < 1) throw std::invalid_argument("TiltingObject: rank must be >= 1");
    if (static_cast<int>(summands_.size()) != rank_)
        throw std::invalid_argument("TiltingObject: expected exactly " + std::to_string(rank_) +
                                    " distinct summands");
    for (const auto& iv : summands_) require_in_rank(iv, rank_);
    if (!is_rigid(rank_, summands_))
        throw std::invalid_argument("TiltingObject: summands admit a nontrivial extension");
}

bool TiltingObject::is_rigid(int rank, const std::set<Interval>& summands) {
    for (const auto& z : summands)
        for (const auto& x : summands)
            if (ext_classify(z, x, rank)) return false;
    return true;
}

std::string TiltingObject::to_string() const {
    std::string out = "[";
    bool first = true;
    for (const auto& iv : summands_) {
        if (!first) out += ',';
        first = false;
        out += iv.to_string();
    }
    out += ']';
    return out;
}

std::vector<TiltingObject> enumerate_tilting(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_tilting: n must be >= 1");
    std::vector<Interval> all;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) all.emplace_back(i, j);

    std::vector<TiltingObject> out;
    std::vector<Interval> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            out.emplace_back(n, std::set<Interval>(chosen.begin(), chosen.end()));
            return;
        }
        const std::size_t needed = static_cast<std::size_t>(n) - chosen.size();
        for (std::size_t k = from; k + needed <= all.size(); ++k) {
            const Interval& cand = all[k];
            bool rigid = true;
            for (const auto& prev : chosen) {
                if (ext_classify(prev, cand, n) || ext_classify(cand, prev, n)) {
                    rigid = false;
                    break;
                }
            }
            if (!rigid) continue;
            chosen.push_back(cand);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

AVector gen(const IntervalSet& x) {
    const auto a = avector_of(quotient_closure(x));
    if (!a) throw std::logic_error("gen: quotient closure is not left-saturated");
    return *a;
}

namespace {

bool componentwise_leq(const AVector& a, const AVector& b) {
    for (int i = 1; i <= a.rank(); ++i)
        if (a.entry(i) > b.entry(i)) return false;
    return true;
}

}  // namespace

Poset rs_poset(int n) {
    const auto objects = enumerate_tilting(n);
    std::vector<std::string> labels;
    std::vector<AVector> gens;
    labels.reserve(objects.size());
    gens.reserve(objects.size());
    for (const auto& t : objects) {
        labels.push_back(t.to_string());
        gens.push_back(gen(IntervalSet(n, t.summands())));
    }
    return make_poset(labels, [&gens](int x, int y) {
        return componentwise_leq(gens[static_cast<std::size_t>(x)], gens[static_cast<std::size_t>(y)]);
    });
}

std::vector<BracketVector> sincere_interval(int n) {
    if (n < 2) throw std::invalid_argument("sincere_interval: n must be >= 2");
    std::vector<BracketVector> out;
    for (const auto& b : enumerate_bracket_vectors(n))
        if (b.avector().entry(1) == n) out.push_back(b);
    return out;
}

}  // namespace pathrep
