#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathrep/fp.hpp"

namespace pathrep {

/// Dense matrix over GF(p), row-major, with exact elimination. Shapes with
/// zero rows or zero columns are first-class: they are the empty linear maps
/// between zero and nonzero spaces and have rank 0.
class FpMatrix {
public:
    FpMatrix(PrimeField field, int rows, int cols);
    static FpMatrix identity(PrimeField field, int n);
    static FpMatrix from_rows(PrimeField field, const std::vector<std::vector<unsigned>>& rows);
    static FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    unsigned at(int r, int c) const;
    void set(int r, int c, unsigned value);

    FpMatrix multiply(const FpMatrix& rhs) const;
    std::vector<unsigned> apply(std::span<const unsigned> v) const;
    FpMatrix augment_cols(const FpMatrix& right) const;  // [this | right]
    FpMatrix stack_rows(const FpMatrix& below) const;    // [this ; below]
    FpMatrix take_rows(int begin, int end) const;        // rows [begin, end)
    FpMatrix negate() const;

    int rank() const;
    /// Columns form a basis of { x : Ax = 0 }.
    FpMatrix nullspace() const;
    /// One solution of Ax = b, or nullopt when inconsistent.
    std::optional<std::vector<unsigned>> solve(std::span<const unsigned> b) const;
    /// One solution X of AX = B, or nullopt when inconsistent.
    std::optional<FpMatrix> solve_matrix(const FpMatrix& b) const;
    /// nullopt when singular; throws std::invalid_argument when not square.
    std::optional<FpMatrix> inverse() const;

    bool is_zero() const;
    bool operator==(const FpMatrix& other) const;

    std::string to_string() const;  // "[[1,0],[0,1]]"; "[]" for empty shapes

private:
    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<unsigned> data_;
};

}  // namespace pathrep
