#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdpcc/errors.hpp"
#include "mdpcc/field_matrix.hpp"
#include "mdpcc/poly.hpp"

namespace mdpcc {

// Matrix of univariate polynomials over a finite field. Entry accessors are
// 0-based; minor index sets follow the 1-based t_1 < t_2 < ... convention used
// throughout the sliding-matrix machinery.
class PolyMatrix {
public:
    PolyMatrix(Field field, int rows, int cols);  // zero-filled
    static PolyMatrix identity(const Field& f, int n);
    static PolyMatrix from_scalar(const FieldMatrix& m);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, Poly p);

    bool is_zero() const;
    int degree() const;          // kZeroPolyDegree for the zero matrix
    int row_degree(int i) const; // kZeroPolyDegree for a zero row

    FieldMatrix coefficient_slice(int i) const;  // zero matrix beyond the degree
    FieldMatrix eval(FieldElement x) const;
    PolyMatrix transpose() const;
    PolyMatrix submatrix(std::span<const int> rows0, std::span<const int> cols0) const;
    PolyMatrix scaled(const Poly& c) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> e_;
};

// Exact determinant: cofactor expansion up to 6x6, fraction-free elimination
// above. Both routes are exposed so tests can cross-check them.
Poly determinant(const PolyMatrix& m);
Poly det_cofactor(const PolyMatrix& m);
Poly det_fraction_free(const PolyMatrix& m);

// Determinant of the selected submatrix; index sets are 1-based, strictly
// increasing and of equal size.
Poly minor_poly(const PolyMatrix& m, std::span<const int> row_set, std::span<const int> col_set);

// Rank over the field of rational functions.
int rank_rational(const PolyMatrix& m);

// Sum of row degrees; throws RankDeficientError on a zero row.
int row_degree_sum(const PolyMatrix& m);
// Maximum degree among nonzero full-size minors of a wide matrix; throws
// RankDeficientError when all of them vanish.
int max_full_minor_degree(const PolyMatrix& m);

struct SmithDecomposition {
    PolyMatrix U, D, V;        // U * D * V == input, U and V unimodular
    std::vector<Poly> factors; // diagonal of D: monic or zero, divisibility chain
    PolyMatrix U_inv, V_inv;   // byproducts of the elementary reduction
};
SmithDecomposition smith(const PolyMatrix& m);

enum class LeftPrimeMethod { minor_gcd, smith, right_inverse };

// Left primeness of a wide full-rank matrix. Throws RankDeficientError when
// the rational rank is deficient (reported distinctly from a false verdict).
bool is_left_prime(const PolyMatrix& m, LeftPrimeMethod method = LeftPrimeMethod::minor_gcd);

// X with a * X == b and deg X <= max_deg, searched degree by degree
// (first success wins); each result is verified by exact multiplication.
std::optional<PolyMatrix> solve_right(const PolyMatrix& a, const PolyMatrix& b, int max_deg);
std::optional<PolyMatrix> right_inverse(const PolyMatrix& m, int max_deg);

struct LeftPrimeFactorization {
    PolyMatrix F;  // rows x rows square factor
    PolyMatrix P;  // left prime, same shape as the input
};
// m == F * P with P left prime; built from the Smith decomposition.
LeftPrimeFactorization left_prime_factorization(const PolyMatrix& m);

struct RowReducedForm {
    PolyMatrix U;                   // unimodular, U * input == R
    PolyMatrix R;
    std::vector<int> row_degrees;
    FieldMatrix leading_row_matrix; // full row rank on exit
};
RowReducedForm row_reduce(const PolyMatrix& m);

FieldMatrix leading_row_matrix(const PolyMatrix& m);  // rows must be nonzero
bool is_row_reduced(const PolyMatrix& m);
bool is_unimodular(const PolyMatrix& m);

// Unimodular W with W * b == a when a and b generate the same row module;
// b must be left prime. nullopt when no such W exists.
std::optional<PolyMatrix> row_equivalence_witness(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace mdpcc
