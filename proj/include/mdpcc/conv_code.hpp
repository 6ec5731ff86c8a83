#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "mdpcc/errors.hpp"
#include "mdpcc/poly_matrix.hpp"

namespace mdpcc {

using Rational = boost::rational<long long>;

enum class Side { generator, parity };
enum class MinorMode { structural, literal };

// Derived parameters of an (n, k, delta) code. All values recompute from
// (n, k, delta); eps1 and eps2 are exact rationals in [0, 1).
struct CodeParams {
    int n = 0;
    int k = 0;
    int delta = 0;
    int L = 0;   // floor(delta/k) + floor(delta/(n-k))
    int nu = 0;  // delta/(n-k) if (n-k)|delta, else floor(delta/(n-k)) + 1
    int mm = 0;  // delta/k if k|delta, else floor(delta/k) + 1
    int t = 0;   // delta - (n-k) * floor(delta/(n-k))
    Rational eps1{0};
    Rational eps2{0};
};
CodeParams derive_params(int n, int k, int delta);

// A code given by one of its defining matrices. The matrix is k x n for the
// generator side and (n-k) x n for the parity side, full rational row rank.
struct ConvCode {
    Side side = Side::generator;
    PolyMatrix matrix;
    int n = 0;
    int k = 0;
};
ConvCode code_from_generator(PolyMatrix g);
ConvCode code_from_parity(PolyMatrix h);

// Degree of the code: maximal full-size minor degree on the generator side;
// on the parity side the row-degree sum of the row-reduced left prime factor.
int code_degree(const ConvCode& code);

// Left prime k x n matrix G with h * G^T == 0, extracted from the inverse of
// the right Smith transform.
PolyMatrix right_kernel_generator(const PolyMatrix& h);

// Block-Toeplitz window matrix. Generator side is upper block triangular with
// blocks G_{c-r}; parity side lower block triangular with blocks H_{r-c}.
struct SlidingMatrix {
    FieldMatrix base;
    int j = 0;
    Side side = Side::generator;
    int block_rows = 0;
    int block_cols = 0;
};
SlidingMatrix sliding(const PolyMatrix& matrix, Side side, int j);

// Admissible full-size column index sets of the window matrix, 1-based and in
// lexicographic order. Generator side ignores the mode (both agree); parity
// side uses t_{s(n-k)} <= sn in structural mode and t_{s(n-k)+1} <= sn in
// literal mode, s = 1..j. The callback returns false to stop enumeration.
template <typename F>
bool enumerate_mdp_index_sets(Side side, int j, int n, int k, MinorMode mode, F&& cb) {
    if (j < 0) throw std::invalid_argument("index sets: j must be >= 0");
    if (k <= 0 || k >= n) throw std::invalid_argument("index sets: need 0 < k < n");
    const int block = (side == Side::generator) ? k : (n - k);
    const int size = (j + 1) * block;
    const int universe = (j + 1) * n;
    std::vector<int> minv(size + 1, 1), maxv(size + 1, universe);
    for (int s = 1; s <= j; ++s) {
        if (side == Side::generator) {
            int pos = s * k + 1;
            if (pos <= size) minv[pos] = std::max(minv[pos], s * n + 1);
        } else {
            int pos = s * block + (mode == MinorMode::literal ? 1 : 0);
            if (pos >= 1 && pos <= size) maxv[pos] = std::min(maxv[pos], s * n);
        }
    }
    std::vector<int> cur(size);
    auto rec = [&](auto&& self, int pos, int low) -> bool {
        if (pos > size) return cb(static_cast<const std::vector<int>&>(cur));
        int lo = std::max(low, minv[pos]);
        int hi = std::min(maxv[pos], universe - (size - pos));
        for (int v = lo; v <= hi; ++v) {
            cur[pos - 1] = v;
            if (!self(self, pos + 1, v + 1)) return false;
        }
        return true;
    };
    return rec(rec, 1, 1);
}

std::vector<std::vector<int>> mdp_index_sets(Side side, int j, int n, int k, MinorMode mode);
long long count_mdp_index_sets(Side side, int j, int n, int k, MinorMode mode);

// Result of enumerating the admissible minors of a window matrix.
struct MinorVerdict {
    bool holds = false;
    long long checked = 0;
    std::optional<std::vector<int>> first_failure;  // 1-based column set
    MinorMode mode = MinorMode::structural;
};

// Evaluates every admissible minor of the window matrix at index j in
// lexicographic order, stopping at the first zero.
MinorVerdict check_mdp_criterion(const PolyMatrix& matrix, Side side, int j,
                                 MinorMode mode = MinorMode::structural);

// Criterion at the largest meaningful window index j = L.
bool is_mdp(const ConvCode& code, MinorMode mode = MinorMode::structural);

int column_bound(int n, int k, int j);
int singleton_bound(int n, int k, int delta);

inline constexpr long long kDefaultOracleCap = 1ll << 24;

// Brute-force j-th column distance: minimum window weight over message
// windows with a nonzero zeroth coefficient. Throws OracleTooLargeError when
// q^(k(j+1)) exceeds the cap.
int column_distance(const ConvCode& code, int j, long long cap = kDefaultOracleCap);

struct FreeDistanceResult {
    int value = 0;
    bool certified = false;  // the value reached the Singleton bound
};
// Column distances for j = 0..j_cap; stops early once the Singleton bound is
// reached. Requires a noncatastrophic code.
FreeDistanceResult free_distance(const ConvCode& code, int j_cap, long long cap = kDefaultOracleCap);

}  // namespace mdpcc
