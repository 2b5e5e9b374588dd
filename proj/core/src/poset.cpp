#include "pathrep/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace pathrep {

namespace {

class BitGrid {
public:
    explicit BitGrid(int n) : words_(static_cast<std::size_t>((n + 63) / 64)),
                              bits_(static_cast<std::size_t>(n) * words_, 0) {}

    void set(int r, int c) {
        bits_[static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c >> 6)] |=
            std::uint64_t{1} << (c & 63);
    }
    bool row_disjoint(int r, const BitGrid& other, int s) const {
        const std::uint64_t* a = &bits_[static_cast<std::size_t>(r) * words_];
        const std::uint64_t* b = &other.bits_[static_cast<std::size_t>(s) * words_];
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] & b[w]) return false;
        return true;
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

Poset make_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
    const int n = static_cast<int>(labels.size());
    // up rows: elements strictly above; down rows: elements strictly below.
    BitGrid up(n), down(n);
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (leq(a, b)) {
                lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                up.set(a, b);
                down.set(b, a);
            }
        }
    }
    // a is covered by b iff a < b and no c has a < c < b: the set strictly
    // above a must not meet the set strictly below b.
    Poset p;
    p.labels = std::move(labels);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                up.row_disjoint(a, down, b))
                p.covers.emplace_back(a, b);
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

namespace {

struct CoverGraph {
    std::vector<std::vector<int>> up;
    std::vector<std::vector<int>> down;

    explicit CoverGraph(const Poset& p)
        : up(static_cast<std::size_t>(p.size())), down(static_cast<std::size_t>(p.size())) {
        for (const auto& [a, b] : p.covers) {
            up[static_cast<std::size_t>(a)].push_back(b);
            down[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& v : up) std::sort(v.begin(), v.end());
        for (auto& v : down) std::sort(v.begin(), v.end());
    }
};

// Iterated refinement with a signature table shared by both graphs, so equal
// colors mean equal invariants across them.
void refine_colors(const CoverGraph& g, const CoverGraph& h, std::vector<int>& gc,
                   std::vector<int>& hc) {
    const int rounds = static_cast<int>(gc.size() + hc.size()) + 2;
    for (int round = 0; round < rounds; ++round) {
        std::map<std::vector<int>, int> table;
        auto signature = [&](const CoverGraph& graph, const std::vector<int>& colors, std::size_t v) {
            std::vector<int> sig;
            sig.push_back(colors[v]);
            std::vector<int> ups, downs;
            for (int w : graph.up[v]) ups.push_back(colors[static_cast<std::size_t>(w)]);
            for (int w : graph.down[v]) downs.push_back(colors[static_cast<std::size_t>(w)]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            sig.push_back(static_cast<int>(ups.size()));
            sig.insert(sig.end(), ups.begin(), ups.end());
            sig.insert(sig.end(), downs.begin(), downs.end());
            return sig;
        };
        std::vector<int> ng(gc.size()), nh(hc.size());
        for (std::size_t v = 0; v < gc.size(); ++v) {
            auto sig = signature(g, gc, v);
            ng[v] = table.emplace(std::move(sig), static_cast<int>(table.size())).first->second;
        }
        for (std::size_t v = 0; v < hc.size(); ++v) {
            auto sig = signature(h, hc, v);
            nh[v] = table.emplace(std::move(sig), static_cast<int>(table.size())).first->second;
        }
        if (ng == gc && nh == hc) break;
        gc = std::move(ng);
        hc = std::move(nh);
    }
}

bool extend_mapping(const CoverGraph& g, const CoverGraph& h, const std::vector<int>& gc,
                    const std::vector<int>& hc, std::vector<int>& g2h, std::vector<int>& h2g,
                    const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int w = 0; w < static_cast<int>(hc.size()); ++w) {
        if (h2g[static_cast<std::size_t>(w)] != -1) continue;
        if (hc[static_cast<std::size_t>(w)] != gc[static_cast<std::size_t>(v)]) continue;
        bool ok = true;
        // Every already-mapped cover neighbor must be matched by the image.
        for (int u : g.up[static_cast<std::size_t>(v)]) {
            const int mu = g2h[static_cast<std::size_t>(u)];
            if (mu != -1 && !std::binary_search(h.up[static_cast<std::size_t>(w)].begin(),
                                                h.up[static_cast<std::size_t>(w)].end(), mu)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (int u : g.down[static_cast<std::size_t>(v)]) {
                const int mu = g2h[static_cast<std::size_t>(u)];
                if (mu != -1 && !std::binary_search(h.down[static_cast<std::size_t>(w)].begin(),
                                                    h.down[static_cast<std::size_t>(w)].end(), mu)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            // The image's mapped neighbors must come from v's neighbors too.
            for (int u : h.up[static_cast<std::size_t>(w)]) {
                const int mu = h2g[static_cast<std::size_t>(u)];
                if (mu != -1 && !std::binary_search(g.up[static_cast<std::size_t>(v)].begin(),
                                                    g.up[static_cast<std::size_t>(v)].end(), mu)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (int u : h.down[static_cast<std::size_t>(w)]) {
                const int mu = h2g[static_cast<std::size_t>(u)];
                if (mu != -1 && !std::binary_search(g.down[static_cast<std::size_t>(v)].begin(),
                                                    g.down[static_cast<std::size_t>(v)].end(), mu)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        g2h[static_cast<std::size_t>(v)] = w;
        h2g[static_cast<std::size_t>(w)] = v;
        if (extend_mapping(g, h, gc, hc, g2h, h2g, order, pos + 1)) return true;
        g2h[static_cast<std::size_t>(v)] = -1;
        h2g[static_cast<std::size_t>(w)] = -1;
    }
    return false;
}

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    if (p.covers.size() != q.covers.size()) return false;
    const CoverGraph g(p), h(q);

    std::vector<int> gc(static_cast<std::size_t>(p.size()), 0);
    std::vector<int> hc(static_cast<std::size_t>(q.size()), 0);
    refine_colors(g, h, gc, hc);

    // Color class sizes must agree.
    std::map<int, int> csize;
    for (int c : gc) ++csize[c];
    for (int c : hc) --csize[c];
    for (const auto& [c, d] : csize)
        if (d != 0) return false;

    // Try rare colors first.
    std::map<int, int> freq;
    for (int c : gc) ++freq[c];
    std::vector<int> order(gc.size());
    for (std::size_t v = 0; v < gc.size(); ++v) order[v] = static_cast<int>(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return freq[gc[static_cast<std::size_t>(a)]] < freq[gc[static_cast<std::size_t>(b)]]; });

    std::vector<int> g2h(gc.size(), -1), h2g(hc.size(), -1);
    return extend_mapping(g, h, gc, hc, g2h, h2g, order, 0);
}

}  // namespace pathrep
