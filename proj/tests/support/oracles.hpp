#pragma once

// Brute-force oracles for the tests. Each is built from first principles
// (exhaustive search, the matrix engine, direct recurrences) so that it never
// shares a formula with the code it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathrep/matrix_rep.hpp"

namespace pathrep::testing {

/// Catalan numbers by the convolution recurrence.
inline std::uint64_t naive_catalan(int m) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int i = 0; i < k; ++i)
            c[static_cast<std::size_t>(k)] +=
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    return c[static_cast<std::size_t>(m)];
}

/// Every balanced bracket string with the given number of pairs.
inline std::vector<std::string> all_balanced(int pairs) {
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

inline MatrixRep random_rep(int rank, int max_dim, PrimeField field, std::mt19937& rng) {
    std::uniform_int_distribution<int> dim_dist(0, max_dim);
    std::vector<int> dims(static_cast<std::size_t>(rank));
    for (auto& d : dims) d = dim_dist(rng);
    std::uniform_int_distribution<unsigned> entry_dist(0, field.modulus() - 1);
    std::vector<FpMatrix> maps;
    for (int a = 0; a + 1 < rank; ++a) {
        FpMatrix m(field, dims[static_cast<std::size_t>(a) + 1], dims[static_cast<std::size_t>(a)]);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.set(r, c, entry_dist(rng));
        maps.push_back(std::move(m));
    }
    return MatrixRep(rank, std::move(dims), std::move(maps), field);
}

/// Whether some linear combination of a hom basis is vertex-wise surjective,
/// by trying every nonzero coefficient tuple.
inline bool surjection_exists(const MatrixRep& x, const MatrixRep& target) {
    bool target_zero = true;
    for (int d : target.dims())
        if (d != 0) target_zero = false;
    if (target_zero) return true;

    const auto basis = hom_basis(x, target);
    const PrimeField& f = x.field();
    const unsigned p = f.modulus();
    std::vector<unsigned> coef(basis.size(), 0);
    for (;;) {
        // next tuple
        std::size_t k = 0;
        while (k < coef.size() && coef[k] == p - 1) coef[k++] = 0;
        if (k == coef.size()) return false;
        ++coef[k];

        bool surjective = true;
        for (int v = 1; v <= x.rank() && surjective; ++v) {
            FpMatrix combo(f, target.dim_at(v), x.dim_at(v));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (coef[b] == 0) continue;
                const FpMatrix& block = basis[b].block(v);
                for (int r = 0; r < combo.rows(); ++r)
                    for (int c = 0; c < combo.cols(); ++c)
                        combo.set(r, c, f.add(combo.at(r, c), f.mul(coef[b], block.at(r, c))));
            }
            if (combo.rank() != combo.rows()) surjective = false;
        }
        if (surjective) return true;
    }
}

}  // namespace pathrep::testing
