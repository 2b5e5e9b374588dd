#include "pathrep/subcat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pathrep {

AVector::AVector(std::vector<int> entries) : a_(std::move(entries)) {
    const int n = static_cast<int>(a_.size());
    if (n < 1) throw std::invalid_argument("AVector: empty");
    for (int i = 1; i <= n; ++i) {
        const int ai = a_[static_cast<std::size_t>(i - 1)];
        if (ai < 0 || ai > n + 1 - i)
            throw std::invalid_argument("AVector: entry " + std::to_string(i) + " out of range [0, " +
                                        std::to_string(n + 1 - i) + "]");
    }
}

int AVector::entry(int i) const {
    if (i < 1) throw std::out_of_range("AVector::entry: index must be >= 1");
    if (i > rank()) return 0;
    return a_[static_cast<std::size_t>(i - 1)];
}

std::string AVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < a_.size(); ++i) os << (i == 0 ? "" : ",") << a_[i];
    return os.str();
}

AVector AVector::parse(const std::string& text) {
    std::vector<int> entries;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("AVector::parse: bad entry '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            throw std::invalid_argument("AVector::parse: bad entry '" + tok + "'");
        entries.push_back(value);
    }
    if (entries.empty()) throw std::invalid_argument("AVector::parse: empty input");
    return AVector(std::move(entries));
}

IntervalSet::IntervalSet(int rank, std::set<Interval> members)
    : rank_(rank), members_(std::move(members)) {
    if (rank_ < 1) throw std::invalid_argument("IntervalSet: rank must be >= 1");
    for (const auto& iv : members_) require_in_rank(iv, rank_);
}

std::string IntervalSet::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& iv : members_) {
        if (!first) os << ',';
        first = false;
        os << iv.to_string();
    }
    os << ']';
    return os.str();
}

IntervalSet f_set(const AVector& a) {
    std::set<Interval> members;
    for (int i = 1; i <= a.rank(); ++i)
        for (int j = i; j < i + a.entry(i); ++j) members.emplace(i, j);
    return IntervalSet(a.rank(), std::move(members));
}

std::optional<AVector> avector_of(const IntervalSet& s) {
    const int n = s.rank();
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        while (i + count <= n && s.contains(Interval(i, i + count))) ++count;
        a[static_cast<std::size_t>(i - 1)] = count;
    }
    AVector candidate(std::move(a));
    if (!(f_set(candidate) == s)) return std::nullopt;
    return candidate;
}

bool is_quotient_closed(const IntervalSet& s) {
    for (const auto& iv : s.members())
        for (const auto& q : quotients_of(iv))
            if (!s.contains(q)) return false;
    return true;
}

IntervalSet quotient_closure(const IntervalSet& s) {
    std::set<Interval> members = s.members();
    for (const auto& iv : s.members())
        for (const auto& q : quotients_of(iv)) members.insert(q);
    return IntervalSet(s.rank(), std::move(members));
}

IntervalSet extension_step(const IntervalSet& s) {
    std::set<Interval> members = s.members();
    for (const auto& z : s.members()) {
        for (const auto& x : s.members()) {
            const auto middle = ext_classify(z, x, s.rank());
            if (!middle) continue;
            for (const auto& part : middle->summands()) members.insert(part);
        }
    }
    return IntervalSet(s.rank(), std::move(members));
}

IntervalSet torsion_closure(const IntervalSet& s) {
    IntervalSet cur = s;
    for (;;) {
        IntervalSet next = extension_step(quotient_closure(cur));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

bool is_torsion(const IntervalSet& s) {
    return quotient_closure(s) == s && extension_step(s) == s;
}

std::vector<AVector> enumerate_avectors(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_avectors: n must be >= 1");
    std::vector<AVector> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Odometer in lexicographic order; digit i has base n+2-i (1-based).
    for (;;) {
        out.emplace_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - i) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return out;
        ++cur[static_cast<std::size_t>(i)];
    }
}

namespace {

std::uint64_t avector_space_size(int n) {
    std::uint64_t total = 1;
    for (int i = 1; i <= n; ++i) total *= static_cast<std::uint64_t>(n + 2 - i);
    return total;
}

// Mixed-radix decode of a lexicographic index: a_1 is most significant.
std::vector<int> avector_at_index(int n, std::uint64_t index) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        const std::uint64_t base = static_cast<std::uint64_t>(n + 2 - i);
        a[static_cast<std::size_t>(i - 1)] = static_cast<int>(index % base);
        index /= base;
    }
    return a;
}

}  // namespace

std::vector<AVector> enumerate_torsion_brute(int n, int jobs) {
    if (n < 1) throw std::invalid_argument("enumerate_torsion_brute: n must be >= 1");
    if (jobs < 1) throw std::invalid_argument("enumerate_torsion_brute: jobs must be >= 1");
    const std::uint64_t total = avector_space_size(n);
    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));

    std::vector<std::vector<AVector>> chunks(static_cast<std::size_t>(workers));
    auto scan = [n, total, workers, &chunks](int w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        const std::uint64_t hi =
            total * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(workers);
        auto& out = chunks[static_cast<std::size_t>(w)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            AVector a(avector_at_index(n, idx));
            if (is_torsion(f_set(a))) out.push_back(std::move(a));
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    std::vector<AVector> out;
    for (auto& chunk : chunks)
        for (auto& a : chunk) out.push_back(std::move(a));
    return out;
}

}  // namespace pathrep
