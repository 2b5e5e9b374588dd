#include "pathrep/matrix_rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pathrep {

MatrixRep::MatrixRep(int rank, std::vector<int> dims, std::vector<FpMatrix> maps, PrimeField field)
    : rank_(rank), dims_(std::move(dims)), maps_(std::move(maps)), field_(field) {
    if (rank_ < 1) throw std::invalid_argument("MatrixRep: rank must be >= 1");
    if (static_cast<int>(dims_.size()) != rank_)
        throw std::invalid_argument("MatrixRep: expected one dimension per vertex");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("MatrixRep: negative dimension");
    if (static_cast<int>(maps_.size()) != rank_ - 1)
        throw std::invalid_argument("MatrixRep: expected one map per arrow");
    for (int a = 0; a + 1 < rank_; ++a) {
        const FpMatrix& m = maps_[static_cast<std::size_t>(a)];
        if (m.field() != field_) throw std::invalid_argument("MatrixRep: map field mismatch");
        if (m.rows() != dims_[static_cast<std::size_t>(a) + 1] || m.cols() != dims_[static_cast<std::size_t>(a)])
            throw std::invalid_argument("MatrixRep: map shape mismatch at arrow " + std::to_string(a + 1));
    }
}

MatrixRep MatrixRep::zero(int rank, PrimeField field) {
    std::vector<int> dims(static_cast<std::size_t>(rank), 0);
    std::vector<FpMatrix> maps;
    for (int a = 0; a + 1 < rank; ++a) maps.emplace_back(field, 0, 0);
    return MatrixRep(rank, std::move(dims), std::move(maps), field);
}

MatrixRep MatrixRep::interval(int rank, const Interval& iv, PrimeField field) {
    require_in_rank(iv, rank);
    std::vector<int> dims(static_cast<std::size_t>(rank), 0);
    for (int v = iv.lo; v <= iv.hi; ++v) dims[static_cast<std::size_t>(v - 1)] = 1;
    std::vector<FpMatrix> maps;
    for (int v = 1; v < rank; ++v) {
        FpMatrix m(field, dims[static_cast<std::size_t>(v)], dims[static_cast<std::size_t>(v - 1)]);
        if (iv.supports(v) && iv.supports(v + 1)) m.set(0, 0, 1);
        maps.push_back(std::move(m));
    }
    return MatrixRep(rank, std::move(dims), std::move(maps), field);
}

MatrixRep MatrixRep::of_rep(const Rep& rep, PrimeField field) {
    MatrixRep acc = zero(rep.rank(), field);
    for (const auto& iv : rep.summands()) acc = acc.direct_sum(interval(rep.rank(), iv, field));
    return acc;
}

int MatrixRep::dim_at(int vertex) const {
    if (vertex < 1 || vertex > rank_) throw std::out_of_range("MatrixRep::dim_at: vertex out of range");
    return dims_[static_cast<std::size_t>(vertex - 1)];
}

const FpMatrix& MatrixRep::arrow_map(int tail) const {
    if (tail < 1 || tail >= rank_) throw std::out_of_range("MatrixRep::arrow_map: tail out of range");
    return maps_[static_cast<std::size_t>(tail - 1)];
}

int MatrixRep::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

MatrixRep MatrixRep::direct_sum(const MatrixRep& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("MatrixRep::direct_sum: rank mismatch");
    if (field_ != other.field_) throw std::invalid_argument("MatrixRep::direct_sum: field mismatch");
    std::vector<int> dims(static_cast<std::size_t>(rank_));
    for (int v = 0; v < rank_; ++v)
        dims[static_cast<std::size_t>(v)] =
            dims_[static_cast<std::size_t>(v)] + other.dims_[static_cast<std::size_t>(v)];
    std::vector<FpMatrix> maps;
    for (int a = 0; a + 1 < rank_; ++a)
        maps.push_back(FpMatrix::block_diag(maps_[static_cast<std::size_t>(a)],
                                            other.maps_[static_cast<std::size_t>(a)]));
    return MatrixRep(rank_, std::move(dims), std::move(maps), field_);
}

FpMatrix MatrixRep::composed_map(int from, int to) const {
    if (from < 1 || to > rank_ || from > to)
        throw std::out_of_range("MatrixRep::composed_map: need 1 <= from <= to <= rank");
    FpMatrix acc = FpMatrix::identity(field_, dims_[static_cast<std::size_t>(from - 1)]);
    for (int v = from; v < to; ++v) acc = arrow_map(v).multiply(acc);
    return acc;
}

bool MatrixRep::operator==(const MatrixRep& other) const {
    return rank_ == other.rank_ && field_ == other.field_ && dims_ == other.dims_ && maps_ == other.maps_;
}

std::string MatrixRep::to_string() const {
    std::ostringstream os;
    os << "MatrixRep(n=" << rank_ << ", p=" << field_.modulus() << ", dims=[";
    for (int v = 0; v < rank_; ++v) os << (v == 0 ? "" : ",") << dims_[static_cast<std::size_t>(v)];
    os << "], maps=[";
    for (int a = 0; a + 1 < rank_; ++a)
        os << (a == 0 ? "" : ",") << maps_[static_cast<std::size_t>(a)].to_string();
    os << "])";
    return os.str();
}

Morphism::Morphism(MatrixRep source, MatrixRep target, std::vector<FpMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    if (source_.rank() != target_.rank()) throw std::invalid_argument("Morphism: rank mismatch");
    if (source_.field() != target_.field()) throw std::invalid_argument("Morphism: field mismatch");
    const int n = source_.rank();
    if (static_cast<int>(blocks_.size()) != n)
        throw std::invalid_argument("Morphism: expected one block per vertex");
    for (int v = 0; v < n; ++v) {
        const FpMatrix& b = blocks_[static_cast<std::size_t>(v)];
        if (b.field() != source_.field()) throw std::invalid_argument("Morphism: block field mismatch");
        if (b.rows() != target_.dims()[static_cast<std::size_t>(v)] ||
            b.cols() != source_.dims()[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Morphism: block shape mismatch at vertex " + std::to_string(v + 1));
    }
    for (int v = 1; v < n; ++v) {
        const FpMatrix lhs = target_.arrow_map(v).multiply(blocks_[static_cast<std::size_t>(v - 1)]);
        const FpMatrix rhs = blocks_[static_cast<std::size_t>(v)].multiply(source_.arrow_map(v));
        if (!(lhs == rhs))
            throw std::invalid_argument("Morphism: commutation fails at arrow " + std::to_string(v));
    }
}

Morphism Morphism::identity(const MatrixRep& x) {
    std::vector<FpMatrix> blocks;
    for (int v = 1; v <= x.rank(); ++v) blocks.push_back(FpMatrix::identity(x.field(), x.dim_at(v)));
    return Morphism(x, x, std::move(blocks));
}

Morphism Morphism::zero(const MatrixRep& source, const MatrixRep& target) {
    std::vector<FpMatrix> blocks;
    for (int v = 1; v <= source.rank(); ++v)
        blocks.emplace_back(source.field(), target.dim_at(v), source.dim_at(v));
    return Morphism(source, target, std::move(blocks));
}

const FpMatrix& Morphism::block(int vertex) const {
    if (vertex < 1 || vertex > source_.rank())
        throw std::out_of_range("Morphism::block: vertex out of range");
    return blocks_[static_cast<std::size_t>(vertex - 1)];
}

bool Morphism::injective() const {
    for (const auto& b : blocks_)
        if (b.rank() != b.cols()) return false;
    return true;
}

bool Morphism::surjective() const {
    for (const auto& b : blocks_)
        if (b.rank() != b.rows()) return false;
    return true;
}

namespace {

// Commutation system for f: src -> dst in the block entries. Variables are
// the entries of all blocks, vertex by vertex, row-major inside a block.
struct HomSystem {
    FpMatrix mat;
    std::vector<int> offset;  // variable offset per 0-based vertex
    int vars = 0;
};

HomSystem hom_system(const MatrixRep& src, const MatrixRep& dst) {
    if (src.rank() != dst.rank()) throw std::invalid_argument("hom system: rank mismatch");
    if (src.field() != dst.field()) throw std::invalid_argument("hom system: field mismatch");
    const int n = src.rank();
    const PrimeField& f = src.field();

    std::vector<int> offset(static_cast<std::size_t>(n), 0);
    int vars = 0;
    for (int v = 0; v < n; ++v) {
        offset[static_cast<std::size_t>(v)] = vars;
        vars += dst.dims()[static_cast<std::size_t>(v)] * src.dims()[static_cast<std::size_t>(v)];
    }
    int eqs = 0;
    for (int a = 0; a + 1 < n; ++a)
        eqs += dst.dims()[static_cast<std::size_t>(a) + 1] * src.dims()[static_cast<std::size_t>(a)];

    FpMatrix m(f, eqs, vars);
    int row = 0;
    for (int a = 0; a + 1 < n; ++a) {
        const FpMatrix& d_map = dst.arrow_map(a + 1);
        const FpMatrix& s_map = src.arrow_map(a + 1);
        const int sd_a = src.dims()[static_cast<std::size_t>(a)];
        const int sd_b = src.dims()[static_cast<std::size_t>(a) + 1];
        const int dd_a = dst.dims()[static_cast<std::size_t>(a)];
        const int dd_b = dst.dims()[static_cast<std::size_t>(a) + 1];
        // row (r, c): sum_k d_map(r,k) f_a(k,c) - sum_k f_{a+1}(r,k) s_map(k,c) = 0
        for (int r = 0; r < dd_b; ++r) {
            for (int c = 0; c < sd_a; ++c) {
                for (int k = 0; k < dd_a; ++k)
                    m.set(row, offset[static_cast<std::size_t>(a)] + k * sd_a + c, d_map.at(r, k));
                for (int k = 0; k < sd_b; ++k)
                    m.set(row, offset[static_cast<std::size_t>(a) + 1] + r * sd_b + k,
                          f.neg(s_map.at(k, c)));
                ++row;
            }
        }
    }
    return HomSystem{std::move(m), std::move(offset), vars};
}

std::vector<FpMatrix> blocks_from_solution(const MatrixRep& src, const MatrixRep& dst,
                                           const HomSystem& sys, const FpMatrix& column, int col) {
    std::vector<FpMatrix> blocks;
    for (int v = 0; v < src.rank(); ++v) {
        const int rows = dst.dims()[static_cast<std::size_t>(v)];
        const int cols = src.dims()[static_cast<std::size_t>(v)];
        FpMatrix b(src.field(), rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                b.set(r, c, column.at(sys.offset[static_cast<std::size_t>(v)] + r * cols + c, col));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace

int hom_space_dim(const MatrixRep& src, const MatrixRep& dst) {
    const HomSystem sys = hom_system(src, dst);
    return sys.vars - sys.mat.rank();
}

std::vector<Morphism> hom_basis(const MatrixRep& src, const MatrixRep& dst) {
    const HomSystem sys = hom_system(src, dst);
    const FpMatrix basis = sys.mat.nullspace();
    std::vector<Morphism> out;
    out.reserve(static_cast<std::size_t>(basis.cols()));
    for (int k = 0; k < basis.cols(); ++k)
        out.emplace_back(src, dst, blocks_from_solution(src, dst, sys, basis, k));
    return out;
}

GeneratedSubrep subrep_generated(const MatrixRep& y, int vertex, std::span<const unsigned> generator) {
    const int n = y.rank();
    const PrimeField& f = y.field();
    if (vertex < 1 || vertex > n) throw std::invalid_argument("subrep_generated: vertex out of range");
    if (static_cast<int>(generator.size()) != y.dim_at(vertex))
        throw std::invalid_argument("subrep_generated: generator length mismatch");

    // Push the generator rightward; once the image vanishes it stays zero.
    std::vector<std::vector<unsigned>> span_vec(static_cast<std::size_t>(n));
    std::vector<unsigned> cur(generator.begin(), generator.end());
    for (auto& e : cur) e %= f.modulus();
    int last = vertex - 1;
    for (int v = vertex; v <= n; ++v) {
        if (v > vertex) cur = y.arrow_map(v - 1).apply(cur);
        if (std::all_of(cur.begin(), cur.end(), [](unsigned e) { return e == 0; })) break;
        span_vec[static_cast<std::size_t>(v - 1)] = cur;
        last = v;
    }

    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    for (int v = vertex; v <= last; ++v) dims[static_cast<std::size_t>(v - 1)] = 1;
    std::vector<FpMatrix> maps;
    for (int v = 1; v < n; ++v) {
        FpMatrix m(f, dims[static_cast<std::size_t>(v)], dims[static_cast<std::size_t>(v - 1)]);
        if (dims[static_cast<std::size_t>(v - 1)] == 1 && dims[static_cast<std::size_t>(v)] == 1)
            m.set(0, 0, 1);
        maps.push_back(std::move(m));
    }
    MatrixRep sub(n, dims, std::move(maps), f);

    std::vector<FpMatrix> blocks;
    for (int v = 1; v <= n; ++v) {
        FpMatrix b(f, y.dim_at(v), dims[static_cast<std::size_t>(v - 1)]);
        if (dims[static_cast<std::size_t>(v - 1)] == 1)
            for (int r = 0; r < y.dim_at(v); ++r)
                b.set(r, 0, span_vec[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(r)]);
        blocks.push_back(std::move(b));
    }
    return GeneratedSubrep{sub, Morphism(sub, y, std::move(blocks))};
}

bool split_exists(const Morphism& inclusion) {
    if (!inclusion.injective())
        throw std::invalid_argument("split_exists: inclusion is not injective at some vertex");
    const MatrixRep& x = inclusion.source();
    const MatrixRep& y = inclusion.target();
    const int n = x.rank();
    const PrimeField& f = x.field();

    // Unknown retraction s: Y -> X, blocks s_v of shape x.dims[v] x y.dims[v].
    std::vector<int> off(static_cast<std::size_t>(n), 0);
    int vars = 0;
    for (int v = 0; v < n; ++v) {
        off[static_cast<std::size_t>(v)] = vars;
        vars += x.dims()[static_cast<std::size_t>(v)] * y.dims()[static_cast<std::size_t>(v)];
    }
    int eqs = 0;
    for (int a = 0; a + 1 < n; ++a)
        eqs += x.dims()[static_cast<std::size_t>(a) + 1] * y.dims()[static_cast<std::size_t>(a)];
    for (int v = 0; v < n; ++v)
        eqs += x.dims()[static_cast<std::size_t>(v)] * x.dims()[static_cast<std::size_t>(v)];

    FpMatrix m(f, eqs, vars);
    std::vector<unsigned> rhs(static_cast<std::size_t>(eqs), 0);
    int row = 0;
    // Commutation: x.map * s_a - s_{a+1} * y.map = 0.
    for (int a = 0; a + 1 < n; ++a) {
        const FpMatrix& xm = x.arrow_map(a + 1);
        const FpMatrix& ym = y.arrow_map(a + 1);
        const int yd_a = y.dims()[static_cast<std::size_t>(a)];
        const int yd_b = y.dims()[static_cast<std::size_t>(a) + 1];
        const int xd_a = x.dims()[static_cast<std::size_t>(a)];
        const int xd_b = x.dims()[static_cast<std::size_t>(a) + 1];
        for (int r = 0; r < xd_b; ++r) {
            for (int c = 0; c < yd_a; ++c) {
                for (int k = 0; k < xd_a; ++k)
                    m.set(row, off[static_cast<std::size_t>(a)] + k * yd_a + c, xm.at(r, k));
                for (int k = 0; k < yd_b; ++k)
                    m.set(row, off[static_cast<std::size_t>(a) + 1] + r * yd_b + k, f.neg(ym.at(k, c)));
                ++row;
            }
        }
    }
    // Retraction: s_v * include_v = id at every vertex.
    for (int v = 0; v < n; ++v) {
        const FpMatrix& inc = inclusion.block(v + 1);
        const int xd = x.dims()[static_cast<std::size_t>(v)];
        const int yd = y.dims()[static_cast<std::size_t>(v)];
        for (int r = 0; r < xd; ++r) {
            for (int c = 0; c < xd; ++c) {
                for (int k = 0; k < yd; ++k)
                    m.set(row, off[static_cast<std::size_t>(v)] + r * yd + k, inc.at(k, c));
                rhs[static_cast<std::size_t>(row)] = (r == c) ? 1u : 0u;
                ++row;
            }
        }
    }
    return m.solve(rhs).has_value();
}

QuotientRep quotient_rep(const Morphism& inclusion) {
    if (!inclusion.injective())
        throw std::invalid_argument("quotient_rep: inclusion is not injective at some vertex");
    const MatrixRep& y = inclusion.target();
    const int n = y.rank();
    const PrimeField& f = y.field();

    // Per vertex: complete the image basis B with standard basis vectors C,
    // invert [B | C]; the bottom rows of the inverse are the projection, and
    // C is a right inverse of it.
    std::vector<FpMatrix> proj;      // q_v
    std::vector<FpMatrix> section;   // c_v with q_v * c_v = id
    std::vector<int> qdims(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        const FpMatrix& b = inclusion.block(v);
        const int d = y.dim_at(v);
        const int r = b.cols();
        FpMatrix basis = b;
        int have = basis.rank();
        std::vector<int> chosen;
        for (int j = 0; j < d && have < d; ++j) {
            FpMatrix e(f, d, 1);
            e.set(j, 0, 1);
            FpMatrix cand = basis.augment_cols(e);
            if (cand.rank() > have) {
                basis = std::move(cand);
                ++have;
                chosen.push_back(j);
            }
        }
        const auto inv = basis.inverse();
        if (!inv) throw std::logic_error("quotient_rep: completed basis is singular");
        proj.push_back(inv->take_rows(r, d));
        FpMatrix c(f, d, d - r);
        for (int k = 0; k < static_cast<int>(chosen.size()); ++k)
            c.set(chosen[static_cast<std::size_t>(k)], k, 1);
        section.push_back(std::move(c));
        qdims[static_cast<std::size_t>(v - 1)] = d - r;
    }

    std::vector<FpMatrix> qmaps;
    for (int a = 1; a < n; ++a)
        qmaps.push_back(proj[static_cast<std::size_t>(a)]
                            .multiply(y.arrow_map(a))
                            .multiply(section[static_cast<std::size_t>(a - 1)]));
    MatrixRep quotient(n, qdims, std::move(qmaps), f);
    Morphism project(y, quotient, std::move(proj));
    return QuotientRep{std::move(quotient), std::move(project)};
}

KernelRep kernel_rep(const Morphism& g) {
    const MatrixRep& y = g.source();
    const int n = y.rank();
    const PrimeField& f = y.field();

    std::vector<FpMatrix> bases;
    std::vector<int> kdims(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        bases.push_back(g.block(v).nullspace());
        kdims[static_cast<std::size_t>(v - 1)] = bases.back().cols();
    }
    std::vector<FpMatrix> kmaps;
    for (int a = 1; a < n; ++a) {
        // The arrow map carries ker(g_a) into ker(g_{a+1}); express it in the bases.
        const FpMatrix image = y.arrow_map(a).multiply(bases[static_cast<std::size_t>(a - 1)]);
        auto m = bases[static_cast<std::size_t>(a)].solve_matrix(image);
        if (!m) throw std::logic_error("kernel_rep: kernel is not arrow-stable");
        kmaps.push_back(std::move(*m));
    }
    MatrixRep kernel(n, kdims, std::move(kmaps), f);
    Morphism include(kernel, y, std::move(bases));
    return KernelRep{std::move(kernel), std::move(include)};
}

PullbackResult pullback(const Morphism& g, const Morphism& h) {
    if (!(g.target() == h.target()))
        throw std::invalid_argument("pullback: g and h must share their target");
    if (!g.surjective() || !h.surjective())
        throw std::invalid_argument("pullback: g and h must be surjective");

    const MatrixRep& y = g.source();
    const MatrixRep& zp = h.source();
    const int n = y.rank();
    const PrimeField& f = y.field();

    // Vertex-wise: Y'_v = ker [ g_v | -h_v ] inside Y_v (+) Z'_v.
    std::vector<FpMatrix> kbasis;
    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        kbasis.push_back(g.block(v).augment_cols(h.block(v).negate()).nullspace());
        dims[static_cast<std::size_t>(v - 1)] = kbasis.back().cols();
    }
    std::vector<FpMatrix> maps;
    for (int a = 1; a < n; ++a) {
        const FpMatrix ambient = FpMatrix::block_diag(y.arrow_map(a), zp.arrow_map(a));
        auto m = kbasis[static_cast<std::size_t>(a)].solve_matrix(
            ambient.multiply(kbasis[static_cast<std::size_t>(a - 1)]));
        if (!m) throw std::logic_error("pullback: fiber product is not arrow-stable");
        maps.push_back(std::move(*m));
    }
    MatrixRep total(n, dims, std::move(maps), f);

    KernelRep ker = kernel_rep(g);
    std::vector<FpMatrix> inc_blocks;
    std::vector<FpMatrix> onto_zp_blocks;
    std::vector<FpMatrix> onto_y_blocks;
    for (int v = 1; v <= n; ++v) {
        const FpMatrix& k = kbasis[static_cast<std::size_t>(v - 1)];
        // X includes as (x, 0); solve for its coordinates in the kernel basis.
        const FpMatrix ambient_x =
            ker.include.block(v).stack_rows(FpMatrix(f, zp.dim_at(v), ker.kernel.dim_at(v)));
        auto c = k.solve_matrix(ambient_x);
        if (!c) throw std::logic_error("pullback: kernel does not embed in the fiber product");
        inc_blocks.push_back(std::move(*c));
        onto_y_blocks.push_back(k.take_rows(0, y.dim_at(v)));
        onto_zp_blocks.push_back(k.take_rows(y.dim_at(v), y.dim_at(v) + zp.dim_at(v)));
    }

    Morphism include_x(ker.kernel, total, std::move(inc_blocks));
    Morphism onto_zprime(total, zp, std::move(onto_zp_blocks));
    Morphism onto_y(total, y, std::move(onto_y_blocks));
    return PullbackResult{std::move(total), std::move(include_x), std::move(onto_zprime),
                          std::move(onto_y)};
}

Rep decompose(const MatrixRep& x) {
    const int n = x.rank();
    // r[i][j], 1-based, computed incrementally along each row of starts.
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n + 1),
                                    std::vector<int>(static_cast<std::size_t>(n + 2), 0));
    for (int i = 1; i <= n; ++i) {
        FpMatrix acc = FpMatrix::identity(x.field(), x.dim_at(i));
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = x.dim_at(i);
        for (int j = i + 1; j <= n; ++j) {
            acc = x.arrow_map(j - 1).multiply(acc);
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc.rank();
        }
    }
    auto rk = [&](int i, int j) -> int {
        if (i < 1 || j > n || i > j) return 0;
        return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    std::vector<Interval> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const int mult = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1);
            if (mult < 0) throw std::logic_error("decompose: negative multiplicity");
            for (int k = 0; k < mult; ++k) out.emplace_back(i, j);
        }
    }
    return Rep(n, std::move(out));
}

Morphism embed_direct_sum(int rank, const Interval& z, const Interval& x, PrimeField field) {
    const MatrixRep xrep = MatrixRep::interval(rank, x, field);
    const MatrixRep y = xrep.direct_sum(MatrixRep::interval(rank, z, field));
    std::vector<FpMatrix> blocks;
    for (int v = 1; v <= rank; ++v) {
        FpMatrix b(field, y.dim_at(v), xrep.dim_at(v));
        for (int c = 0; c < xrep.dim_at(v); ++c) b.set(c, c, 1);  // [I; 0]
        blocks.push_back(std::move(b));
    }
    return Morphism(xrep, y, std::move(blocks));
}

std::optional<Morphism> embed_middle_term(int rank, const Interval& z, const Interval& x,
                                          PrimeField field) {
    const auto middle = ext_classify(z, x, rank);
    if (!middle) return std::nullopt;
    const MatrixRep y = MatrixRep::of_rep(*middle, field);
    const MatrixRep xrep = MatrixRep::interval(rank, x, field);
    const auto& parts = middle->summands();  // sorted; coordinates follow this order
    std::vector<FpMatrix> blocks;
    for (int v = 1; v <= rank; ++v) {
        FpMatrix b(field, y.dim_at(v), xrep.dim_at(v));
        if (xrep.dim_at(v) == 1) {
            int coord = 0;
            for (const auto& part : parts) {
                if (part.supports(v)) b.set(coord, 0, 1);
                coord += part.supports(v) ? 1 : 0;
            }
        }
        blocks.push_back(std::move(b));
    }
    return Morphism(xrep, y, std::move(blocks));
}

}  // namespace pathrep
