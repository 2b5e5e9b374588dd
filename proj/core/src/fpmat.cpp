#include "pathrep/fpmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pathrep {

namespace {

// Reduced row echelon form, in place on a row-major buffer.
struct Echelon {
    std::vector<unsigned> m;
    std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

Echelon rref(const PrimeField& f, std::vector<unsigned> m, int rows, int cols) {
    Echelon e;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r) {
            if (m[static_cast<std::size_t>(r) * cols + c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pr) {
            for (int k = c; k < cols; ++k)
                std::swap(m[static_cast<std::size_t>(sel) * cols + k],
                          m[static_cast<std::size_t>(pr) * cols + k]);
        }
        const unsigned piv_inv = f.inv(m[static_cast<std::size_t>(pr) * cols + c]);
        for (int k = c; k < cols; ++k) {
            auto& v = m[static_cast<std::size_t>(pr) * cols + k];
            v = f.mul(v, piv_inv);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const unsigned factor = m[static_cast<std::size_t>(r) * cols + c];
            if (factor == 0) continue;
            for (int k = c; k < cols; ++k) {
                auto& v = m[static_cast<std::size_t>(r) * cols + k];
                v = f.sub(v, f.mul(factor, m[static_cast<std::size_t>(pr) * cols + k]));
            }
        }
        e.pivots.push_back(c);
        ++pr;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

FpMatrix::FpMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows < 0 || cols < 0 ? 0 : rows) * static_cast<std::size_t>(cols < 0 ? 0 : cols), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative shape");
}

FpMatrix FpMatrix::identity(PrimeField field, int n) {
    FpMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field, const std::vector<std::vector<unsigned>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    FpMatrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::block_diag(const FpMatrix& a, const FpMatrix& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("FpMatrix::block_diag: field mismatch");
    FpMatrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c));
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) m.set(a.rows_ + r, a.cols_ + c, b.at(r, c));
    return m;
}

unsigned FpMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("FpMatrix::at: index out of range");
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

void FpMatrix::set(int r, int c, unsigned value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("FpMatrix::set: index out of range");
    data_[static_cast<std::size_t>(r) * cols_ + c] = value % field_.modulus();
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("FpMatrix::multiply: field mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("FpMatrix::multiply: shape mismatch");
    FpMatrix out(field_, rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < rhs.cols_; ++c) {
            unsigned long long acc = 0;
            for (int k = 0; k < cols_; ++k)
                acc += static_cast<unsigned long long>(at(r, k)) * rhs.at(k, c);
            out.set(r, c, static_cast<unsigned>(acc % field_.modulus()));
        }
    }
    return out;
}

std::vector<unsigned> FpMatrix::apply(std::span<const unsigned> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("FpMatrix::apply: length mismatch");
    std::vector<unsigned> out(static_cast<std::size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r) {
        unsigned long long acc = 0;
        for (int k = 0; k < cols_; ++k)
            acc += static_cast<unsigned long long>(at(r, k)) * (v[static_cast<std::size_t>(k)] % field_.modulus());
        out[static_cast<std::size_t>(r)] = static_cast<unsigned>(acc % field_.modulus());
    }
    return out;
}

FpMatrix FpMatrix::augment_cols(const FpMatrix& right) const {
    if (field_ != right.field_) throw std::invalid_argument("FpMatrix::augment_cols: field mismatch");
    if (rows_ != right.rows_) throw std::invalid_argument("FpMatrix::augment_cols: row mismatch");
    FpMatrix m(field_, rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
        for (int c = 0; c < right.cols_; ++c) m.set(r, cols_ + c, right.at(r, c));
    }
    return m;
}

FpMatrix FpMatrix::stack_rows(const FpMatrix& below) const {
    if (field_ != below.field_) throw std::invalid_argument("FpMatrix::stack_rows: field mismatch");
    if (cols_ != below.cols_) throw std::invalid_argument("FpMatrix::stack_rows: column mismatch");
    FpMatrix m(field_, rows_ + below.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    for (int r = 0; r < below.rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set(rows_ + r, c, below.at(r, c));
    return m;
}

FpMatrix FpMatrix::take_rows(int begin, int end) const {
    if (begin < 0 || end < begin || end > rows_)
        throw std::out_of_range("FpMatrix::take_rows: bad range");
    FpMatrix m(field_, end - begin, cols_);
    for (int r = begin; r < end; ++r)
        for (int c = 0; c < cols_; ++c) m.set(r - begin, c, at(r, c));
    return m;
}

FpMatrix FpMatrix::negate() const {
    FpMatrix m(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set(r, c, field_.neg(at(r, c)));
    return m;
}

int FpMatrix::rank() const {
    return static_cast<int>(rref(field_, data_, rows_, cols_).pivots.size());
}

FpMatrix FpMatrix::nullspace() const {
    const auto e = rref(field_, data_, rows_, cols_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    FpMatrix basis(field_, cols_, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        const int fc = free_cols[static_cast<std::size_t>(k)];
        basis.set(fc, k, 1);
        for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r)
            basis.set(e.pivots[static_cast<std::size_t>(r)], k,
                      field_.neg(e.m[static_cast<std::size_t>(r) * cols_ + fc]));
    }
    return basis;
}

std::optional<std::vector<unsigned>> FpMatrix::solve(std::span<const unsigned> b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("FpMatrix::solve: right-hand side length mismatch");
    FpMatrix rhs(field_, rows_, 1);
    for (int r = 0; r < rows_; ++r) rhs.set(r, 0, b[static_cast<std::size_t>(r)]);
    auto x = solve_matrix(rhs);
    if (!x) return std::nullopt;
    std::vector<unsigned> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = x->at(c, 0);
    return out;
}

std::optional<FpMatrix> FpMatrix::solve_matrix(const FpMatrix& b) const {
    if (field_ != b.field_) throw std::invalid_argument("FpMatrix::solve_matrix: field mismatch");
    if (b.rows_ != rows_) throw std::invalid_argument("FpMatrix::solve_matrix: row mismatch");
    const FpMatrix aug = augment_cols(b);
    const auto e = rref(field_, aug.data_, aug.rows_, aug.cols_);
    for (int c : e.pivots)
        if (c >= cols_) return std::nullopt;  // pivot in the augmented block: inconsistent
    FpMatrix x(field_, cols_, b.cols_);
    for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r) {
        const int pc = e.pivots[static_cast<std::size_t>(r)];
        for (int j = 0; j < b.cols_; ++j)
            x.set(pc, j, e.m[static_cast<std::size_t>(r) * aug.cols_ + cols_ + j]);
    }
    return x;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::inverse: matrix must be square");
    if (rank() != rows_) return std::nullopt;
    return solve_matrix(identity(field_, rows_));
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](unsigned v) { return v == 0; });
}

bool FpMatrix::operator==(const FpMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string FpMatrix::to_string() const {
    if (rows_ == 0 || cols_ == 0) return "[]";
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : ",[");
        for (int c = 0; c < cols_; ++c) os << (c == 0 ? "" : ",") << at(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace pathrep
