#pragma once

#include <cstdint>
#include <vector>

#include "mdpcc/theorems.hpp"

namespace mdpcc {

// The bundled (3,1) worked example over GF(2): a non-left-prime parity-check
// matrix H whose naive degree readings overshoot, together with the left prime
// row-reduced parity-check matrix H~ of the same code. All numbers are
// computed, not hardcoded, so they stay checkable.
struct Example31 {
    Field field;
    PolyMatrix H;
    PolyMatrix H_tilde;
    int degree = 0;               // code degree, via the left prime factor
    int row_degree_sum_h = 0;     // naive row-degree sum of H
    int max_minor_degree_h = 0;   // naive maximal full-size minor degree of H
    bool h_left_prime = false;
    bool h_tilde_left_prime = false;
    bool h_tilde_row_reduced = false;
    bool same_kernel = false;
};
Example31 example_3_1();

// Cauchy matrix with entries 1/(x_i - y_j); evaluation points must be pairwise
// distinct and the two lists disjoint. Every minor of every size is nonzero.
FieldMatrix cauchy_matrix(const Field& f, int rows, int cols,
                          const std::vector<FieldElement>& x,
                          const std::vector<FieldElement>& y);
// Default evaluation points x = (0..rows-1), y = (rows..rows+cols-1) in the
// field's canonical enumeration; requires q >= rows + cols.
FieldMatrix cauchy_matrix(const Field& f, int rows, int cols);

// Exhaustive minor check; sizes 1..min(rows,cols), or only the full size.
// Throws OracleTooLargeError beyond 10^6 minors.
bool all_minors_nonzero(const FieldMatrix& m, bool full_size_only = false);

// Degenerate-window construction M(z) = M_0 (1 - z) with M_0 Cauchy: the
// minor criterion passes at j = L = 0 yet the matrix is not left prime and
// the parity-side code degree collapses to zero. Requires 1 <= delta < k and
// delta < n - k.
struct CounterexampleL0 {
    PolyMatrix matrix;
    MinorVerdict criterion_at_l;
    bool left_prime = false;
    int code_degree = 0;
    bool eval_at_one_zero = false;
};
CounterexampleL0 counterexample_l0(int n, int k, int delta, const Field& f, Side side);

struct SearchConfig {
    int n = 0;
    int k = 0;
    int delta = 0;
    Field field;
    enum class Strategy { exhaustive, random } strategy = Strategy::exhaustive;
    long long budget = 1ll << 20;
    std::uint64_t seed = 1;
};

struct SearchHit {
    PolyMatrix matrix;  // parity-check matrix, canonical up to row scaling
    CorollaryAudit audit;
};

struct SearchResult {
    std::vector<SearchHit> hits;  // lexicographic by coefficient encoding
    bool truncated = false;
    long long examined = 0;
};

// Scans parity-check candidates with generic row degrees (t rows of degree nu,
// the rest nu - 1, degree-nu rows first) and keeps those whose audit fully
// passes. Candidates are canonical up to nonzero row scaling; deterministic
// for a fixed seed.
SearchResult search_mdp(const SearchConfig& config);

}  // namespace mdpcc
