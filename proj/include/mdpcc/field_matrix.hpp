#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdpcc/finite_field.hpp"

namespace mdpcc {

// Dense matrix of field scalars with exact Gaussian elimination. Row and
// column accessors are 0-based.
class FieldMatrix {
public:
    FieldMatrix(Field field, int rows, int cols);
    static FieldMatrix identity(const Field& f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, FieldElement v) { e_[static_cast<size_t>(i) * cols_ + j] = v; }
    void set_block(int i0, int j0, const FieldMatrix& block);

    bool is_zero() const;
    FieldMatrix transpose() const;
    FieldMatrix submatrix(std::span<const int> rows0, std::span<const int> cols0) const;

    int rank() const;
    FieldElement det() const;  // square only
    // Any X with (*this) * X == rhs, or nullopt when the system is
    // inconsistent. Free variables are set to zero.
    std::optional<FieldMatrix> solve(const FieldMatrix& rhs) const;
    // Columns form a basis of the right kernel.
    FieldMatrix nullspace() const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

private:
    // Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref_inplace();

    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FieldElement> e_;
};

}  // namespace mdpcc
