#include "pathrep/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "pathrep/matrix_rep.hpp"
#include "pathrep/rotation.hpp"
#include "pathrep/subcat.hpp"
#include "pathrep/tamari.hpp"
#include "pathrep/tilting.hpp"

namespace pathrep {

namespace {

std::uint64_t catalan(int m) {
    std::uint64_t c = 1;
    for (int k = 0; k < m; ++k)
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

std::vector<std::string> balanced_strings(int pairs) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int open, int close) -> void {
        if (open == pairs && close == pairs) {
            out.push_back(cur);
            return;
        }
        if (open < pairs) {
            cur.push_back('(');
            self(self, open + 1, close);
            cur.pop_back();
        }
        if (close < open) {
            cur.push_back(')');
            self(self, open, close + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

SuiteResult pass(std::string name, std::string detail) {
    return SuiteResult{std::move(name), true, std::move(detail)};
}

SuiteResult fail(std::string name, std::string detail) {
    return SuiteResult{std::move(name), false, std::move(detail)};
}

}  // namespace

SuiteResult verify_torsion_equivalence(int max_n, int jobs) {
    const std::string name = "torsion-equivalence";
    std::ostringstream counts;
    for (int n = 1; n <= max_n; ++n) {
        const auto brute = enumerate_torsion_brute(n, jobs);
        const auto bracket = enumerate_bracket_vectors(n);
        if (brute.size() != bracket.size())
            return fail(name, "rank " + std::to_string(n) + ": brute count " +
                                  std::to_string(brute.size()) + " vs bracket count " +
                                  std::to_string(bracket.size()));
        for (std::size_t k = 0; k < brute.size(); ++k) {
            if (!(brute[k] == bracket[k].avector()))
                return fail(name, "rank " + std::to_string(n) + ": element " + std::to_string(k) +
                                      " brute " + brute[k].to_string() + " vs bracket " +
                                      bracket[k].to_string());
        }
        counts << (n == 1 ? "" : ",") << brute.size();
    }
    return pass(name, "ranks 1.." + std::to_string(max_n) + " agree; counts " + counts.str());
}

SuiteResult verify_matrix_oracle(int max_hom_n, int max_split_n, unsigned prime) {
    const std::string name = "matrix-oracle";
    const PrimeField f(prime);
    std::uint64_t hom_checked = 0;
    for (int n = 1; n <= max_hom_n; ++n) {
        std::vector<Interval> all;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) all.emplace_back(i, j);
        for (const auto& src : all) {
            const MatrixRep ms = MatrixRep::interval(n, src, f);
            for (const auto& dst : all) {
                const MatrixRep md = MatrixRep::interval(n, dst, f);
                const int got = hom_space_dim(ms, md);
                const int want = hom_dim(src, dst, n);
                if (got != want)
                    return fail(name, "rank " + std::to_string(n) + ": hom " + src.to_string() +
                                          " -> " + dst.to_string() + " is " + std::to_string(got) +
                                          ", rule says " + std::to_string(want));
                ++hom_checked;
            }
        }
    }
    std::uint64_t split_checked = 0;
    for (int n = 1; n <= max_split_n; ++n) {
        std::vector<Interval> all;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) all.emplace_back(i, j);
        for (const auto& z : all) {
            for (const auto& x : all) {
                const Morphism trivial = embed_direct_sum(n, z, x, f);
                if (!split_exists(trivial))
                    return fail(name, "rank " + std::to_string(n) + ": direct sum of " +
                                          z.to_string() + " and " + x.to_string() + " does not split");
                const auto middle = embed_middle_term(n, z, x, f);
                if (middle.has_value() != ext_classify(z, x, n).has_value())
                    return fail(name, "rank " + std::to_string(n) + ": middle-term embedding and " +
                                          "extension rule disagree for (" + z.to_string() + ", " +
                                          x.to_string() + ")");
                if (middle) {
                    if (split_exists(*middle))
                        return fail(name, "rank " + std::to_string(n) + ": middle term for (" +
                                              z.to_string() + ", " + x.to_string() + ") splits");
                    const Rep cok = decompose(quotient_rep(*middle).quotient);
                    if (!(cok == Rep(n, {z})))
                        return fail(name, "rank " + std::to_string(n) + ": middle-term cokernel is " +
                                              cok.to_string() + ", expected " + z.to_string());
                }
                ++split_checked;
            }
        }
    }
    return pass(name, std::to_string(hom_checked) + " hom pairs and " +
                          std::to_string(split_checked) + " split verdicts over GF(" +
                          std::to_string(prime) + ")");
}

SuiteResult verify_roundtrip(int max_n) {
    const std::string name = "roundtrip";
    for (int n = 1; n <= max_n; ++n) {
        const auto elems = enumerate_bracket_vectors(n);
        if (elems.size() != catalan(n + 1))
            return fail(name, "rank " + std::to_string(n) + ": " + std::to_string(elems.size()) +
                                  " bracket vectors, expected Catalan " +
                                  std::to_string(catalan(n + 1)));
        for (const auto& e : elems) {
            if (!(encode(decode(e)) == e))
                return fail(name, "rank " + std::to_string(n) + ": encode(decode(" + e.to_string() +
                                      ")) differs");
        }
        for (const auto& s : balanced_strings(n + 1)) {
            const BracketString bs(s);
            if (!(decode(encode(bs)) == bs))
                return fail(name, "rank " + std::to_string(n) + ": decode(encode(" + s + ")) differs");
        }
    }
    return pass(name, "both directions over all elements, ranks 1.." + std::to_string(max_n));
}

SuiteResult verify_lattice_isomorphism(int max_n) {
    const std::string name = "lattice-isomorphism";
    for (int n = 1; n <= max_n; ++n) {
        const Poset t = hasse(n);
        const Poset r = rotation_lattice(n);
        const std::uint64_t cm = catalan(n + 1);
        const std::uint64_t want_edges = static_cast<std::uint64_t>(n) * cm / 2;
        if (t.covers.size() != want_edges)
            return fail(name, "rank " + std::to_string(n) + ": " + std::to_string(t.covers.size()) +
                                  " covers, expected " + std::to_string(want_edges));
        if (!poset_isomorphic(t, r))
            return fail(name, "rank " + std::to_string(n) +
                                  ": bracket order and rotation lattice are not isomorphic");
    }
    return pass(name, "ranks 1.." + std::to_string(max_n) + ", cover counts included");
}

SuiteResult verify_tilting_rs(int max_n) {
    const std::string name = "tilting-rs";
    for (int n = 1; n <= max_n; ++n) {
        const auto tilts = enumerate_tilting(n);
        if (tilts.size() != catalan(n))
            return fail(name, "rank " + std::to_string(n) + ": " + std::to_string(tilts.size()) +
                                  " tilting objects, expected Catalan " + std::to_string(catalan(n)));
        for (const auto& t : tilts) {
            if (!t.summands().count(Interval(1, n)))
                return fail(name, "rank " + std::to_string(n) + ": " + t.to_string() +
                                      " lacks the full interval");
            if (gen(IntervalSet(n, t.summands())).entry(1) != n)
                return fail(name, "rank " + std::to_string(n) + ": gen(" + t.to_string() +
                                      ") does not start with " + std::to_string(n));
        }
        if (n >= 2) {
            if (!poset_isomorphic(rs_poset(n), hasse(n - 1)))
                return fail(name, "rank " + std::to_string(n) +
                                      ": tilting poset is not the Tamari lattice of rank " +
                                      std::to_string(n - 1));
            const auto sincere = sincere_interval(n);
            const auto lower = enumerate_bracket_vectors(n - 1);
            if (sincere.size() != lower.size())
                return fail(name, "rank " + std::to_string(n) + ": " + std::to_string(sincere.size()) +
                                      " sincere classes vs " + std::to_string(lower.size()) +
                                      " elements one rank down");
            std::vector<AVector> dropped;
            for (const auto& b : sincere) {
                std::vector<int> tail(b.avector().entries().begin() + 1,
                                      b.avector().entries().end());
                dropped.emplace_back(std::move(tail));
            }
            std::sort(dropped.begin(), dropped.end());
            for (std::size_t k = 0; k < dropped.size(); ++k)
                if (!(dropped[k] == lower[k].avector()))
                    return fail(name, "rank " + std::to_string(n) +
                                          ": dropping a_1 is not the expected bijection");
        }
    }
    return pass(name, "counts, full-interval membership, gen, poset shape, ranks 1.." +
                          std::to_string(max_n));
}

std::vector<SuiteResult> verify_all(int n, unsigned prime, int jobs, int unsafe_n) {
    auto bound = [unsafe_n](int hard) { return std::max(hard, unsafe_n); };
    std::vector<SuiteResult> out;
    out.push_back(verify_torsion_equivalence(std::min(n, bound(6)), jobs));
    out.push_back(verify_matrix_oracle(std::min(n, bound(5)), std::min(n, bound(4)), prime));
    out.push_back(verify_roundtrip(std::min(n, bound(8))));
    out.push_back(verify_lattice_isomorphism(std::min(n, bound(7))));
    out.push_back(verify_tilting_rs(std::min(n, bound(6))));
    return out;
}

}  // namespace pathrep
