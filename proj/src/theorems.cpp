#include "mdpcc/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdpcc/combinatorics.hpp"

namespace mdpcc {
namespace {

long long rational_ceil(const Rational& x) {
    long long num = x.numerator(), den = x.denominator();  // den > 0
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
}

}  // namespace

StackedMatrix build_stacked(const PolyMatrix& matrix, Side side, int r,
                            const std::optional<std::vector<int>>& S) {
    if (r < 0) throw std::invalid_argument("build_stacked: r must be >= 0");
    if (matrix.is_zero()) throw std::invalid_argument("build_stacked: zero matrix");
    const Field& f = matrix.field();
    int rows_per = matrix.rows(), n = matrix.cols();
    int d = std::max(matrix.degree(), 0);
    if (S) {
        if (S->empty() || static_cast<int>(S->size()) >= rows_per)
            throw std::invalid_argument("build_stacked: S must be a nonempty proper row subset");
        int prev = 0;
        for (int s : *S) {
            if (s <= prev || s > rows_per)
                throw std::invalid_argument("build_stacked: S must be sorted, 1-based and in range");
            prev = s;
        }
    }
    std::vector<FieldMatrix> slices;
    for (int i = 0; i <= d; ++i) slices.push_back(matrix.coefficient_slice(i));
    int last_rows = S ? static_cast<int>(S->size()) : rows_per;
    FieldMatrix base(f, rows_per * (r + d) + last_rows, n * (r + 1));
    for (int bi = 0; bi <= r + d; ++bi)
        for (int bj = 0; bj <= r; ++bj) {
            int c = bi - bj;
            if (c < 0 || c > d) continue;
            if (!S || bi < r + d) {
                base.set_block(bi * rows_per, bj * n, slices[c]);
            } else {
                for (size_t idx = 0; idx < S->size(); ++idx)
                    for (int col = 0; col < n; ++col)
                        base.set(rows_per * (r + d) + static_cast<int>(idx), bj * n + col,
                                 slices[c].at((*S)[idx] - 1, col));
            }
        }
    return StackedMatrix{std::move(base), r, S, side};
}

SufficiencyReport verify_sufficiency(const PolyMatrix& matrix, Side side, int r,
                                     const std::optional<std::vector<int>>& S) {
    StackedMatrix st = build_stacked(matrix, side, r, S);
    const Field& f = matrix.field();
    int w = matrix.rows();
    SufficiencyReport rep;
    rep.stacked_rows = st.base.rows();
    rep.stacked_cols = st.base.cols();
    rep.rank = st.base.rank();
    rep.rank_full = (rep.rank == rep.stacked_rows);
    try {
        rep.left_prime_confirmed = is_left_prime(matrix, LeftPrimeMethod::minor_gcd);
    } catch (const RankDeficientError&) {
        rep.left_prime_confirmed = false;  // rank-deficient matrices have no right inverse
    }
    if (rep.rank_full) {
        FieldMatrix rhs(f, st.base.rows(), w);
        for (int i = 0; i < w; ++i) rhs.set(i, i, f.one());
        std::optional<FieldMatrix> sol = st.base.solve(rhs);
        if (!sol)
            throw std::logic_error("verify_sufficiency: full row rank but inconsistent system");
        int n = matrix.cols();
        PolyMatrix x(f, n, w);
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < w; ++j) {
                std::vector<FieldElement> cs(r + 1, f.zero());
                for (int t = 0; t <= r; ++t) cs[t] = sol->at(t * n + l, j);
                x.set(l, j, Poly(f, std::move(cs)));
            }
        rep.witness_verified = (matrix * x == PolyMatrix::identity(f, w));
        rep.witness = std::move(x);
    }
    rep.implication_ok = !rep.rank_full ||
                         (rep.left_prime_confirmed && rep.witness && rep.witness_verified);
    return rep;
}

RFeasibleRange r_feasible_range(int n, int k, int delta, Side side) {
    if (k <= 0 || k >= n || delta < 0) throw std::invalid_argument("r_feasible_range: bad parameters");
    int nk = n - k;
    RFeasibleRange out;
    if (side == Side::parity) {
        if (delta % nk == 0)
            throw std::invalid_argument("r_feasible_range: parity side assumes (n-k) does not divide delta");
        int nu = delta / nk + 1;
        out.lower = Rational(2ll * nk * nu - n - delta, k);
        out.upper = delta / k - 1;
    } else {
        if (delta % k == 0)
            throw std::invalid_argument("r_feasible_range: generator side assumes k does not divide delta");
        int mm = delta / k + 1;
        out.lower = Rational(2ll * k * mm - n - delta, nk);
        out.upper = delta / nk - 1;
    }
    long long lo = std::max<long long>(0, rational_ceil(out.lower));
    out.integer_feasible = (lo <= out.upper);
    return out;
}

bool epsilon_condition(int n, int k, int delta, Side side) {
    if (k <= 0 || k >= n || delta < 0) throw std::invalid_argument("epsilon_condition: bad parameters");
    int nk = n - k;
    if (delta % nk == 0 || delta % k == 0)
        throw std::invalid_argument("epsilon_condition: requires (n-k) and k to not divide delta");
    Rational eps1(delta % k, k);
    Rational eps2(delta % nk, nk);
    if (side == Side::parity)
        return eps1 <= (Rational(n, k) - 1) * (2 * eps2 - 1);
    return eps2 <= (Rational(n, nk) - 1) * (2 * eps1 - 1);
}

CorollaryAudit corollary_audit(const PolyMatrix& matrix, Side side, int n, int k,
                               int delta_claimed) {
    int expected_rows = (side == Side::parity) ? n - k : k;
    if (matrix.rows() != expected_rows || matrix.cols() != n)
        throw std::invalid_argument("corollary_audit: matrix dimensions do not match the side");
    CorollaryAudit audit;
    audit.params = derive_params(n, k, delta_claimed);
    audit.mdp_structural = check_mdp_criterion(matrix, side, audit.params.L, MinorMode::structural);
    audit.mdp_literal = check_mdp_criterion(matrix, side, audit.params.L, MinorMode::literal);

    int divisor = (side == Side::parity) ? n - k : k;
    audit.divides = (delta_claimed % divisor == 0);
    int expected_deg = (side == Side::parity) ? audit.params.nu : audit.params.mm;
    audit.degree_profile_ok = !matrix.is_zero() && matrix.degree() == expected_deg;

    if (audit.degree_profile_ok) {
        if (audit.divides) {
            int r = (side == Side::parity) ? delta_claimed / k : delta_claimed / (n - k);
            audit.r_used = r;
            audit.sufficiency = verify_sufficiency(matrix, side, r, std::nullopt);
            audit.sufficiency_found = audit.sufficiency->rank_full;
        } else {
            audit.r_range = r_feasible_range(n, k, delta_claimed, side);
            int t = (side == Side::parity) ? audit.params.t
                                           : delta_claimed - k * (delta_claimed / k);
            if (audit.r_range->integer_feasible && t >= 1 && t < matrix.rows()) {
                int rlo = static_cast<int>(std::max<long long>(0, rational_ceil(audit.r_range->lower)));
                for (int r = rlo; r <= audit.r_range->upper && !audit.sufficiency_found; ++r) {
                    for_each_combination(matrix.rows(), t, [&](const std::vector<int>& s1) {
                        SufficiencyReport rep = verify_sufficiency(matrix, side, r, s1);
                        if (rep.rank_full) {
                            audit.sufficiency = std::move(rep);
                            audit.r_used = r;
                            audit.S_used = s1;
                            audit.sufficiency_found = true;
                            return false;  // lexicographically first witness wins
                        }
                        if (!audit.sufficiency) audit.sufficiency = std::move(rep);
                        return true;
                    });
                }
            }
        }
    }

    try {
        ConvCode code = (side == Side::parity) ? code_from_parity(matrix)
                                               : code_from_generator(matrix);
        audit.degree_computed = code_degree(code);
        audit.degree_matches = (audit.degree_computed == delta_claimed);
    } catch (const RankDeficientError&) {
        audit.rank_deficient = true;
    }
    try {
        audit.left_prime = is_left_prime(matrix, LeftPrimeMethod::minor_gcd);
    } catch (const RankDeficientError&) {
        audit.rank_deficient = true;
        audit.left_prime = false;
    }
    audit.row_reduced = is_row_reduced(matrix);
    return audit;
}

}  // namespace mdpcc
