#include "pathrep/tamari.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathrep {

BracketString::BracketString(std::string s) : s_(std::move(s)) {
    if (s_.size() < 4 || s_.size() % 2 != 0)
        throw std::invalid_argument("BracketString: length must be even and >= 4");
    int depth = 0;
    for (char c : s_) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
            if (depth < 0) throw std::invalid_argument("BracketString: unmatched ')'");
        } else {
            throw std::invalid_argument("BracketString: characters must be '(' or ')'");
        }
    }
    if (depth != 0) throw std::invalid_argument("BracketString: unmatched '('");
}

std::optional<BracketViolation> bracket_violation(const AVector& a) {
    for (int i = 1; i <= a.rank(); ++i)
        for (int j = 1; j <= a.entry(i); ++j)
            if (j + a.entry(i + j) > a.entry(i)) return BracketViolation{i, j};
    return std::nullopt;
}

bool is_bracket_vector(const AVector& a) { return !bracket_violation(a).has_value(); }

std::optional<BracketVector> BracketVector::from(const AVector& a) {
    if (!is_bracket_vector(a)) return std::nullopt;
    return BracketVector(a);
}

BracketVector BracketVector::checked(const AVector& a) {
    if (const auto v = bracket_violation(a))
        throw std::invalid_argument("bracket condition fails at (i=" + std::to_string(v->i) +
                                    ", j=" + std::to_string(v->j) + ")");
    return BracketVector(a);
}

BracketVector encode(const BracketString& s) {
    const std::string& str = s.str();
    // match[k] = index of the ')' closing the '(' at k
    std::vector<int> match(str.size(), 0);
    std::vector<int> stack;
    for (int k = 0; k < static_cast<int>(str.size()); ++k) {
        if (str[static_cast<std::size_t>(k)] == '(') {
            stack.push_back(k);
        } else {
            match[static_cast<std::size_t>(stack.back())] = k;
            stack.pop_back();
        }
    }
    std::vector<int> counts;
    for (int k = 0; k < static_cast<int>(str.size()); ++k) {
        if (str[static_cast<std::size_t>(k)] != '(') continue;
        int inner = 0;
        for (int t = k + 1; t < match[static_cast<std::size_t>(k)]; ++t)
            if (str[static_cast<std::size_t>(t)] == '(') ++inner;
        counts.push_back(inner);
    }
    counts.pop_back();  // the last '(' always counts 0
    return BracketVector::checked(AVector(std::move(counts)));
}

namespace {

// Emit the groups opened by positions i, i+1, ..., i+m-1: position i opens a
// group nesting the next a_i of them, and the remaining m-1-a_i follow it.
void decode_run(const AVector& a, int i, int m, std::string& out) {
    if (m == 0) return;
    const int c = a.entry(i);
    out.push_back('(');
    decode_run(a, i + 1, c, out);
    out.push_back(')');
    decode_run(a, i + c + 1, m - c - 1, out);
}

}  // namespace

BracketString decode(const BracketVector& a) {
    std::string out;
    out.reserve(2 * static_cast<std::size_t>(a.rank()) + 2);
    decode_run(a.avector(), 1, a.rank() + 1, out);
    return BracketString(std::move(out));
}

std::vector<BracketVector> enumerate_bracket_vectors(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_bracket_vectors: n must be >= 1");
    // The condition at index i reads only entries at indices > i, so build
    // right to left; any partial suffix extends with zeros to a valid vector.
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::vector<BracketVector> out;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == 0) {
            out.push_back(BracketVector::checked(AVector(cur)));
            return;
        }
        for (int v = 0; v <= n + 1 - i; ++v) {
            bool ok = true;
            for (int j = 1; j <= v; ++j) {
                const int later = (i + j <= n) ? cur[static_cast<std::size_t>(i + j - 1)] : 0;
                if (j + later > v) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur[static_cast<std::size_t>(i - 1)] = v;
            self(self, i - 1);
        }
        cur[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

bool leq(const BracketVector& a, const BracketVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("leq: rank mismatch");
    for (int i = 1; i <= a.rank(); ++i)
        if (a.avector().entry(i) > b.avector().entry(i)) return false;
    return true;
}

BracketVector meet(const BracketVector& a, const BracketVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("meet: rank mismatch");
    std::vector<int> m(static_cast<std::size_t>(a.rank()));
    for (int i = 1; i <= a.rank(); ++i)
        m[static_cast<std::size_t>(i - 1)] = std::min(a.avector().entry(i), b.avector().entry(i));
    return BracketVector::checked(AVector(std::move(m)));
}

BracketVector join(const BracketVector& a, const BracketVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("join: rank mismatch");
    const int n = a.rank();
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        c[static_cast<std::size_t>(i - 1)] = std::max(a.avector().entry(i), b.avector().entry(i));
    auto entry = [&](int i) -> int { return (i <= n) ? c[static_cast<std::size_t>(i - 1)] : 0; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= entry(i); ++j) {
                const int need = j + entry(i + j);
                if (need > entry(i)) {
                    c[static_cast<std::size_t>(i - 1)] = need;
                    changed = true;
                }
            }
        }
    }
    return BracketVector::checked(AVector(std::move(c)));
}

BracketVector bottom_vector(int n) {
    if (n < 1) throw std::invalid_argument("bottom_vector: n must be >= 1");
    return BracketVector::checked(AVector(std::vector<int>(static_cast<std::size_t>(n), 0)));
}

BracketVector top_vector(int n) {
    if (n < 1) throw std::invalid_argument("top_vector: n must be >= 1");
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) t[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    return BracketVector::checked(AVector(std::move(t)));
}

Poset hasse(int n) {
    const auto elems = enumerate_bracket_vectors(n);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems) labels.push_back(e.to_string());
    return make_poset(labels, [&elems](int x, int y) {
        return leq(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]);
    });
}

}  // namespace pathrep
