#include "mdpcc/field_matrix.hpp"

#include <stdexcept>

namespace mdpcc {
namespace {

void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("matrix operands live in different fields");
}

}  // namespace

FieldMatrix::FieldMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, FieldElement{0}) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FieldMatrix: negative dimension");
}

FieldMatrix FieldMatrix::identity(const Field& f, int n) {
    FieldMatrix out(f, n, n);
    for (int i = 0; i < n; ++i) out.set(i, i, f.one());
    return out;
}

void FieldMatrix::set_block(int i0, int j0, const FieldMatrix& block) {
    if (i0 + block.rows() > rows_ || j0 + block.cols() > cols_)
        throw std::invalid_argument("FieldMatrix: block out of range");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) set(i0 + i, j0 + j, block.at(i, j));
}

bool FieldMatrix::is_zero() const {
    for (FieldElement v : e_)
        if (v.v != 0) return false;
    return true;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

FieldMatrix FieldMatrix::submatrix(std::span<const int> rows0, std::span<const int> cols0) const {
    FieldMatrix out(field_, static_cast<int>(rows0.size()), static_cast<int>(cols0.size()));
    for (size_t i = 0; i < rows0.size(); ++i) {
        if (rows0[i] < 0 || rows0[i] >= rows_) throw std::invalid_argument("submatrix: row out of range");
        for (size_t j = 0; j < cols0.size(); ++j) {
            if (cols0[j] < 0 || cols0[j] >= cols_) throw std::invalid_argument("submatrix: column out of range");
            out.set(static_cast<int>(i), static_cast<int>(j), at(rows0[i], cols0[j]));
        }
    }
    return out;
}

std::vector<int> FieldMatrix::rref_inplace() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i)
            if (at(i, col).v != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) {
                FieldElement t = at(p, j);
                set(p, j, at(row, j));
                set(row, j, t);
            }
        FieldElement inv = field_.inv(at(row, col));
        for (int j = col; j < cols_; ++j) set(row, j, field_.mul(at(row, j), inv));
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).v == 0) continue;
            FieldElement c = at(i, col);
            for (int j = col; j < cols_; ++j)
                set(i, j, field_.sub(at(i, j), field_.mul(c, at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int FieldMatrix::rank() const {
    FieldMatrix tmp = *this;
    return static_cast<int>(tmp.rref_inplace().size());
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix must be square");
    FieldMatrix a = *this;
    FieldElement result = field_.one();
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int i = col; i < rows_; ++i)
            if (a.at(i, col).v != 0) { p = i; break; }
        if (p < 0) return field_.zero();
        if (p != col) {
            for (int j = 0; j < cols_; ++j) {
                FieldElement t = a.at(p, j);
                a.set(p, j, a.at(col, j));
                a.set(col, j, t);
            }
            result = field_.neg(result);
        }
        FieldElement piv = a.at(col, col);
        result = field_.mul(result, piv);
        FieldElement inv = field_.inv(piv);
        for (int i = col + 1; i < rows_; ++i) {
            if (a.at(i, col).v == 0) continue;
            FieldElement c = field_.mul(a.at(i, col), inv);
            for (int j = col; j < cols_; ++j)
                a.set(i, j, field_.sub(a.at(i, j), field_.mul(c, a.at(col, j))));
        }
    }
    return result;
}

std::optional<FieldMatrix> FieldMatrix::solve(const FieldMatrix& rhs) const {
    require_same_field(*this, rhs);
    if (rhs.rows() != rows_) throw std::invalid_argument("solve: right-hand side row mismatch");
    FieldMatrix aug(field_, rows_, cols_ + rhs.cols());
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, rhs);
    std::vector<int> pivots;
    {
        // eliminate only over the coefficient columns
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (aug.at(i, col).v != 0) { p = i; break; }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < aug.cols(); ++j) {
                    FieldElement t = aug.at(p, j);
                    aug.set(p, j, aug.at(row, j));
                    aug.set(row, j, t);
                }
            FieldElement inv = field_.inv(aug.at(row, col));
            for (int j = col; j < aug.cols(); ++j) aug.set(row, j, field_.mul(aug.at(row, j), inv));
            for (int i = 0; i < rows_; ++i) {
                if (i == row || aug.at(i, col).v == 0) continue;
                FieldElement c = aug.at(i, col);
                for (int j = col; j < aug.cols(); ++j)
                    aug.set(i, j, field_.sub(aug.at(i, j), field_.mul(c, aug.at(row, j))));
            }
            pivots.push_back(col);
            ++row;
        }
        // rows below the last pivot must have vanishing right-hand side
        for (int i = row; i < rows_; ++i)
            for (int j = 0; j < rhs.cols(); ++j)
                if (aug.at(i, cols_ + j).v != 0) return std::nullopt;
    }
    FieldMatrix x(field_, cols_, rhs.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < rhs.cols(); ++j)
            x.set(pivots[r], j, aug.at(static_cast<int>(r), cols_ + j));
    return x;
}

FieldMatrix FieldMatrix::nullspace() const {
    FieldMatrix r = *this;
    std::vector<int> pivots = r.rref_inplace();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix basis(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t b = 0; b < free_cols.size(); ++b) {
        int fc = free_cols[b];
        basis.set(fc, static_cast<int>(b), field_.one());
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.set(pivots[pr], static_cast<int>(b), field_.neg(r.at(static_cast<int>(pr), fc)));
    }
    return basis;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = a.field();
    FieldMatrix out(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t) {
            FieldElement av = a.at(i, t);
            if (av.v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.set(i, j, f.add(out.at(i, j), f.mul(av, b.at(t, j))));
        }
    return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
    return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().sub(a.at(i, j), b.at(i, j)));
    return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field() == b.field() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

}  // namespace mdpcc
