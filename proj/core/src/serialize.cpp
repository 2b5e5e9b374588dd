#include "pathrep/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace pathrep {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json covers_json(const Poset& p) {
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : p.covers) covers.push_back(ordered_json::array({lo, hi}));
    return covers;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string dot_digraph(const Poset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        os << "  " << i << " [label=\"" << dot_escape(p.labels[static_cast<std::size_t>(i)])
           << "\"];\n";
    for (const auto& [lo, hi] : p.covers) os << "  " << lo << " -> " << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace

std::string tamari_poset_json(int n, const std::vector<BracketVector>& elements, const Poset& p) {
    if (static_cast<int>(elements.size()) != p.size())
        throw std::invalid_argument("tamari_poset_json: element count does not match the poset");
    ordered_json root;
    root["n"] = n;
    ordered_json elems = ordered_json::array();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        ordered_json e;
        e["id"] = static_cast<int>(i);
        e["a"] = elements[i].avector().entries();
        e["bracket"] = decode(elements[i]).str();
        elems.push_back(std::move(e));
    }
    root["elements"] = std::move(elems);
    root["covers"] = covers_json(p);
    return root.dump(2);
}

std::string tamari_poset_dot(int n, const std::vector<BracketVector>& elements, const Poset& p) {
    if (static_cast<int>(elements.size()) != p.size())
        throw std::invalid_argument("tamari_poset_dot: element count does not match the poset");
    Poset labeled = p;
    for (std::size_t i = 0; i < elements.size(); ++i)
        labeled.labels[i] = decode(elements[i]).str();
    return dot_digraph(labeled, "tamari_" + std::to_string(n));
}

std::string rs_poset_json(int n, const std::vector<TiltingObject>& elements, const Poset& p) {
    if (static_cast<int>(elements.size()) != p.size())
        throw std::invalid_argument("rs_poset_json: element count does not match the poset");
    ordered_json root;
    root["n"] = n;
    ordered_json elems = ordered_json::array();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        ordered_json e;
        e["id"] = static_cast<int>(i);
        ordered_json summands = ordered_json::array();
        for (const auto& iv : elements[i].summands())
            summands.push_back(ordered_json::array({iv.lo, iv.hi}));
        e["summands"] = std::move(summands);
        e["gen"] = gen(IntervalSet(n, elements[i].summands())).entries();
        elems.push_back(std::move(e));
    }
    root["elements"] = std::move(elems);
    root["covers"] = covers_json(p);
    return root.dump(2);
}

std::string poset_dot(const Poset& p, const std::string& name) { return dot_digraph(p, name); }

std::string matrix_rep_json(const MatrixRep& x) {
    ordered_json root;
    root["n"] = x.rank();
    root["p"] = x.field().modulus();
    root["dims"] = x.dims();
    ordered_json maps = ordered_json::array();
    for (int a = 1; a < x.rank(); ++a) {
        const FpMatrix& m = x.arrow_map(a);
        ordered_json entries = ordered_json::array();
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c));
        maps.push_back(std::move(entries));
    }
    root["maps"] = std::move(maps);
    return root.dump(2);
}

}  // namespace pathrep
