#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathrep/fpmat.hpp"
#include "pathrep/interval.hpp"

namespace pathrep {

/// Concrete representation of the path quiver 1 -> 2 -> ... -> n over a prime
/// field: a dimension per vertex and a matrix per arrow. arrow_map(v) is the
/// map V_v -> V_{v+1}, stored with shape dims[v+1] x dims[v] and acting on
/// column vectors. This is the independent linear-algebra oracle against
/// which the closed-form interval rules are checked.
class MatrixRep {
public:
    MatrixRep(int rank, std::vector<int> dims, std::vector<FpMatrix> maps, PrimeField field);
    static MatrixRep zero(int rank, PrimeField field);
    /// build_interval: the concrete E^{ij}.
    static MatrixRep interval(int rank, const Interval& iv, PrimeField field);
    /// Direct sum of the interval representations of a formal Rep.
    static MatrixRep of_rep(const Rep& rep, PrimeField field);

    int rank() const { return rank_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim_at(int vertex) const;                 // 1-based vertex
    const FpMatrix& arrow_map(int tail) const;    // 1-based tail in [1, rank-1]
    const PrimeField& field() const { return field_; }
    int total_dim() const;

    MatrixRep direct_sum(const MatrixRep& other) const;
    /// Composite map V_from -> V_to for 1 <= from <= to <= rank
    /// (the identity on V_from when from == to).
    FpMatrix composed_map(int from, int to) const;

    bool operator==(const MatrixRep& other) const;
    std::string to_string() const;

private:
    int rank_;
    std::vector<int> dims_;
    std::vector<FpMatrix> maps_;
    PrimeField field_;
};

/// Vertex-wise linear maps between two representations of the same rank over
/// the same field. Construction validates the commutation condition
/// target.arrow_map(v) * block(v) == block(v+1) * source.arrow_map(v)
/// at every arrow and throws std::invalid_argument when it fails.
class Morphism {
public:
    Morphism(MatrixRep source, MatrixRep target, std::vector<FpMatrix> blocks);
    static Morphism identity(const MatrixRep& x);
    static Morphism zero(const MatrixRep& source, const MatrixRep& target);

    const MatrixRep& source() const { return source_; }
    const MatrixRep& target() const { return target_; }
    const FpMatrix& block(int vertex) const;  // 1-based vertex
    const std::vector<FpMatrix>& blocks() const { return blocks_; }

    bool injective() const;   // every block has full column rank
    bool surjective() const;  // every block has full row rank

private:
    MatrixRep source_;
    MatrixRep target_;
    std::vector<FpMatrix> blocks_;
};

/// Dimension of Hom(src, dst): number of block-variable degrees of freedom
/// minus the rank of the commutation system.
int hom_space_dim(const MatrixRep& src, const MatrixRep& dst);

/// A basis of Hom(src, dst) as validated morphisms.
std::vector<Morphism> hom_basis(const MatrixRep& src, const MatrixRep& dst);

struct GeneratedSubrep {
    MatrixRep sub;
    Morphism include;
};

/// Subrepresentation of y generated by one vector at the given 1-based
/// vertex. For the linear orientation the image propagates only rightward,
/// so the result is supported on a single interval (possibly empty).
GeneratedSubrep subrep_generated(const MatrixRep& y, int vertex, std::span<const unsigned> generator);

/// Whether the inclusion X -> Y admits a retraction s: Y -> X with
/// s * include = id_X, i.e. whether X is a direct summand. Throws when the
/// given morphism is not injective at some vertex.
bool split_exists(const Morphism& inclusion);

struct QuotientRep {
    MatrixRep quotient;
    Morphism project;
};

/// Quotient of inclusion.target() by the image of inclusion.source().
QuotientRep quotient_rep(const Morphism& inclusion);

struct KernelRep {
    MatrixRep kernel;
    Morphism include;
};

/// Vertex-wise kernel of a morphism, with its inclusion into the source.
KernelRep kernel_rep(const Morphism& g);

struct PullbackResult {
    MatrixRep total;       // Y' with Y'_v = { (y, z') : g(y) = h(z') }
    Morphism include_x;    // X = ker g, included as (x, 0)
    Morphism onto_zprime;  // (y, z') -> z'; its kernel is the image of include_x
    Morphism onto_y;       // (y, z') -> y; surjective because h is
};

/// Fiber product of g: Y ->> Z and h: Z' ->> Z, realizing the pulled-back
/// extension of Z' by X = ker g. Both inputs must be surjective with equal
/// targets.
PullbackResult pullback(const Morphism& g, const Morphism& h);

/// Interval multiplicities by rank inclusion-exclusion: with r(i,j) the rank
/// of the composite map from vertex i to vertex j (r(i,i) = dims[i], zero out
/// of range), the multiplicity of E^{ij} is
/// r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1).
/// The resulting dimension vectors always reconstruct dims().
Rep decompose(const MatrixRep& x);

/// X (+) Z with the block inclusion [I; 0] of X.
Morphism embed_direct_sum(int rank, const Interval& z, const Interval& x, PrimeField field);

/// When the nontrivial-extension rule fires for (Z, X), the middle term with
/// the canonical inclusion of X: the basis vector of X at vertex q maps to
/// the sum of the basis vectors of the summands supported at q. Returns
/// nullopt when the rule does not fire.
std::optional<Morphism> embed_middle_term(int rank, const Interval& z, const Interval& x, PrimeField field);

}  // namespace pathrep
