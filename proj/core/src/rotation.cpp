#include "pathrep/rotation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathrep {

namespace {

struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

// Leaf is the null pointer; an internal node owns two subtrees.
struct Tree {
    TreePtr left;
    TreePtr right;
};

TreePtr node(TreePtr l, TreePtr r) { return std::make_shared<const Tree>(Tree{std::move(l), std::move(r)}); }

std::string serialize(const TreePtr& t) {
    if (!t) return "";
    return "(" + serialize(t->left) + ")" + serialize(t->right);
}

// All binary trees with m internal nodes.
std::vector<TreePtr> all_trees(int m) {
    if (m == 0) return {nullptr};
    std::vector<TreePtr> out;
    for (int k = 0; k < m; ++k) {
        const auto lefts = all_trees(k);
        const auto rights = all_trees(m - 1 - k);
        for (const auto& l : lefts)
            for (const auto& r : rights) out.push_back(node(l, r));
    }
    return out;
}

// Every single right rotation ((A B) C) -> (A (B C)) applicable anywhere in t.
void rotations(const TreePtr& t, std::vector<TreePtr>& out,
               const std::function<TreePtr(TreePtr)>& rebuild) {
    if (!t) return;
    if (t->left) {
        // Rotate at the root of t.
        out.push_back(rebuild(node(t->left->left, node(t->left->right, t->right))));
    }
    rotations(t->left, out, [&](TreePtr s) { return rebuild(node(std::move(s), t->right)); });
    rotations(t->right, out, [&](TreePtr s) { return rebuild(node(t->left, std::move(s))); });
}

}  // namespace

Poset rotation_lattice(int n) {
    if (n < 1) throw std::invalid_argument("rotation_lattice: n must be >= 1");
    const auto trees = all_trees(n + 1);

    std::vector<std::string> labels;
    labels.reserve(trees.size());
    for (const auto& t : trees) labels.push_back(serialize(t));
    std::vector<int> order(trees.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });

    std::map<std::string, int> index;
    std::vector<std::string> sorted_labels;
    sorted_labels.reserve(trees.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_labels.push_back(labels[static_cast<std::size_t>(order[i])]);
        index.emplace(sorted_labels.back(), static_cast<int>(i));
    }

    Poset p;
    p.labels = std::move(sorted_labels);
    for (const auto& t : trees) {
        const int from = index.at(serialize(t));
        std::vector<TreePtr> next;
        rotations(t, next, [](TreePtr s) { return s; });
        for (const auto& u : next) p.covers.emplace_back(from, index.at(serialize(u)));
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
    return p;
}

}  // namespace pathrep
