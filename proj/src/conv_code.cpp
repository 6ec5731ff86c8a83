#include "mdpcc/conv_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdpcc {

CodeParams derive_params(int n, int k, int delta) {
    if (k <= 0 || k >= n) throw std::invalid_argument("derive_params: need 0 < k < n");
    if (delta < 0) throw std::invalid_argument("derive_params: delta must be >= 0");
    CodeParams p;
    p.n = n;
    p.k = k;
    p.delta = delta;
    int nk = n - k;
    p.L = delta / k + delta / nk;
    p.nu = (delta % nk == 0) ? delta / nk : delta / nk + 1;
    p.mm = (delta % k == 0) ? delta / k : delta / k + 1;
    p.t = delta - nk * (delta / nk);
    p.eps1 = Rational(delta % k, k);
    p.eps2 = Rational(delta % nk, nk);
    return p;
}

ConvCode code_from_generator(PolyMatrix g) {
    if (g.rows() >= g.cols())
        throw std::invalid_argument("generator matrix must be k x n with k < n");
    if (rank_rational(g) < g.rows())
        throw RankDeficientError("generator matrix does not have full row rank");
    int k = g.rows(), n = g.cols();
    return ConvCode{Side::generator, std::move(g), n, k};
}

ConvCode code_from_parity(PolyMatrix h) {
    if (h.rows() >= h.cols())
        throw std::invalid_argument("parity-check matrix must be (n-k) x n with k > 0");
    if (rank_rational(h) < h.rows())
        throw RankDeficientError("parity-check matrix does not have full row rank");
    int n = h.cols(), k = h.cols() - h.rows();
    return ConvCode{Side::parity, std::move(h), n, k};
}

int code_degree(const ConvCode& code) {
    if (code.side == Side::generator) return max_full_minor_degree(code.matrix);
    // the naive row-degree sum of a non-left-prime parity-check matrix
    // overshoots; go through the left prime factor instead
    LeftPrimeFactorization fac = left_prime_factorization(code.matrix);
    RowReducedForm rr = row_reduce(fac.P);
    int sum = 0;
    for (int d : rr.row_degrees) sum += d;
    return sum;
}

PolyMatrix right_kernel_generator(const PolyMatrix& h) {
    if (h.rows() >= h.cols())
        throw std::invalid_argument("right_kernel_generator: matrix must be wide");
    SmithDecomposition s = smith(h);
    for (const Poly& d : s.factors)
        if (d.is_zero())
            throw RankDeficientError("right_kernel_generator: deficient rational row rank");
    int n = h.cols(), nk = h.rows(), k = n - nk;
    // kernel basis: the last k columns of V^{-1}, transposed into rows
    PolyMatrix g(h.field(), k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) g.set(i, j, s.V_inv.at(j, nk + i));
    if (!(h * g.transpose()).is_zero())
        throw std::logic_error("right_kernel_generator: kernel product is nonzero");
    return g;
}

SlidingMatrix sliding(const PolyMatrix& matrix, Side side, int j) {
    if (j < 0) throw std::invalid_argument("sliding: j must be >= 0");
    if (matrix.rows() >= matrix.cols())
        throw std::invalid_argument("sliding: matrix must be wide");
    const Field& f = matrix.field();
    int br = matrix.rows(), bc = matrix.cols();
    int deg = matrix.is_zero() ? -1 : matrix.degree();
    std::vector<FieldMatrix> slices;
    for (int i = 0; i <= std::min(deg, j); ++i) slices.push_back(matrix.coefficient_slice(i));
    FieldMatrix base(f, (j + 1) * br, (j + 1) * bc);
    for (int bi = 0; bi <= j; ++bi)
        for (int bj = 0; bj <= j; ++bj) {
            int d = (side == Side::generator) ? bj - bi : bi - bj;
            if (d < 0 || d > deg) continue;
            base.set_block(bi * br, bj * bc, slices[d]);
        }
    return SlidingMatrix{std::move(base), j, side, br, bc};
}

std::vector<std::vector<int>> mdp_index_sets(Side side, int j, int n, int k, MinorMode mode) {
    std::vector<std::vector<int>> out;
    enumerate_mdp_index_sets(side, j, n, k, mode, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

long long count_mdp_index_sets(Side side, int j, int n, int k, MinorMode mode) {
    long long count = 0;
    enumerate_mdp_index_sets(side, j, n, k, mode, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

MinorVerdict check_mdp_criterion(const PolyMatrix& matrix, Side side, int j, MinorMode mode) {
    SlidingMatrix sm = sliding(matrix, side, j);
    int n = matrix.cols();
    int k = (side == Side::generator) ? matrix.rows() : matrix.cols() - matrix.rows();
    MinorVerdict verdict;
    verdict.mode = mode;
    std::vector<int> rows0(sm.base.rows());
    for (size_t i = 0; i < rows0.size(); ++i) rows0[i] = static_cast<int>(i);
    std::vector<int> cols0(rows0.size());
    enumerate_mdp_index_sets(side, j, n, k, mode, [&](const std::vector<int>& cols1) {
        ++verdict.checked;
        for (size_t i = 0; i < cols1.size(); ++i) cols0[i] = cols1[i] - 1;
        if (sm.base.submatrix(rows0, cols0).det().v == 0) {
            verdict.first_failure = cols1;
            return false;
        }
        return true;
    });
    verdict.holds = !verdict.first_failure.has_value();
    return verdict;
}

bool is_mdp(const ConvCode& code, MinorMode mode) {
    int delta = code_degree(code);
    CodeParams params = derive_params(code.n, code.k, delta);
    return check_mdp_criterion(code.matrix, code.side, params.L, mode).holds;
}

int column_bound(int n, int k, int j) {
    if (k <= 0 || k >= n || j < 0) throw std::invalid_argument("column_bound: bad parameters");
    return (n - k) * (j + 1) + 1;
}

int singleton_bound(int n, int k, int delta) {
    if (k <= 0 || k >= n || delta < 0) throw std::invalid_argument("singleton_bound: bad parameters");
    return (n - k) * (delta / k + 1) + delta + 1;
}

namespace {

PolyMatrix oracle_generator(const ConvCode& code) {
    PolyMatrix g = (code.side == Side::generator) ? code.matrix
                                                  : right_kernel_generator(code.matrix);
    if (g.coefficient_slice(0).rank() < g.rows())
        throw std::domain_error("column distance oracle needs a generator with full-rank constant term");
    return g;
}

// Minimum window weight over messages (u_0,...,u_j) with u_0 != 0. Scaling a
// message by a nonzero constant preserves weights, so u_0 runs over
// representatives whose first nonzero coefficient is 1.
int window_distance(const PolyMatrix& g, int j, long long cap) {
    const Field& f = g.field();
    int k = g.rows();
    long long q = f.q();
    long long space = 1;
    for (int i = 0; i < k * (j + 1); ++i) {
        space *= q;
        if (space > cap)
            throw OracleTooLargeError("column distance oracle: q^(k(j+1)) exceeds the cap of " +
                                      std::to_string(cap) + " messages");
    }
    SlidingMatrix sm = sliding(g, Side::generator, j);
    const FieldMatrix& base = sm.base;
    int rows = base.rows(), cols = base.cols();

    long long head_count = 1;  // q^k
    for (int i = 0; i < k; ++i) head_count *= q;
    long long tail_count = 1;  // q^(k*j)
    for (int i = 0; i < k * j; ++i) tail_count *= q;

    std::vector<FieldElement> message(rows, f.zero());
    std::vector<FieldElement> acc(cols);
    int best = cols + 1;
    for (long long head = 1; head < head_count; ++head) {
        long long h = head;
        bool canonical = true;
        bool seen_nonzero = false;
        for (int i = 0; i < k; ++i) {
            auto digit = static_cast<std::uint32_t>(h % q);
            h /= q;
            if (!seen_nonzero && digit != 0) {
                seen_nonzero = true;
                if (digit != 1) canonical = false;
            }
            message[i] = FieldElement{digit};
        }
        if (!canonical) continue;
        for (long long tail = 0; tail < tail_count; ++tail) {
            long long t = tail;
            for (int i = k; i < rows; ++i) {
                message[i] = FieldElement{static_cast<std::uint32_t>(t % q)};
                t /= q;
            }
            std::fill(acc.begin(), acc.end(), f.zero());
            for (int r = 0; r < rows; ++r) {
                FieldElement ur = message[r];
                if (ur.v == 0) continue;
                for (int c = 0; c < cols; ++c) {
                    FieldElement b = base.at(r, c);
                    if (b.v != 0) acc[c] = f.add(acc[c], f.mul(ur, b));
                }
            }
            int weight = 0;
            for (FieldElement v : acc) weight += (v.v != 0);
            best = std::min(best, weight);
        }
    }
    return best;
}

}  // namespace

int column_distance(const ConvCode& code, int j, long long cap) {
    if (j < 0) throw std::invalid_argument("column_distance: j must be >= 0");
    return window_distance(oracle_generator(code), j, cap);
}

FreeDistanceResult free_distance(const ConvCode& code, int j_cap, long long cap) {
    if (j_cap < 0) throw std::invalid_argument("free_distance: j_cap must be >= 0");
    PolyMatrix g = oracle_generator(code);
    if (!is_left_prime(g))
        throw std::domain_error("free_distance: code is catastrophic (no left prime generator)");
    int delta = code_degree(code);
    int bound = singleton_bound(code.n, code.k, delta);
    int d = 0;
    for (int j = 0; j <= j_cap; ++j) {
        d = window_distance(g, j, cap);
        if (d == bound) return {d, true};
    }
    return {d, false};
}

}  // namespace mdpcc
