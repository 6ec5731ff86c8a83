#include "mdpcc/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "mdpcc/combinatorics.hpp"

namespace mdpcc {

Example31 example_3_1() {
    Field f = Field::prime(2);
    PolyMatrix h(f, 2, 3);
    h.set(0, 0, Poly::from_ints(f, {0, 1, 1}));  // z(1+z)
    h.set(0, 2, Poly::from_ints(f, {1, 1}));
    h.set(1, 1, Poly::from_ints(f, {1, 1}));
    h.set(1, 2, Poly::from_ints(f, {1, 1}));
    PolyMatrix ht(f, 2, 3);
    ht.set(0, 0, Poly::from_ints(f, {0, 1}));
    ht.set(0, 2, Poly::one(f));
    ht.set(1, 1, Poly::one(f));
    ht.set(1, 2, Poly::one(f));

    Example31 out{f, h, ht};
    out.degree = code_degree(code_from_parity(h));
    out.row_degree_sum_h = row_degree_sum(h);
    out.max_minor_degree_h = max_full_minor_degree(h);
    out.h_left_prime = is_left_prime(h);
    out.h_tilde_left_prime = is_left_prime(ht);
    out.h_tilde_row_reduced = is_row_reduced(ht);
    PolyMatrix g = right_kernel_generator(h);
    PolyMatrix gt = right_kernel_generator(ht);
    out.same_kernel = (h * gt.transpose()).is_zero() && (ht * g.transpose()).is_zero();
    return out;
}

FieldMatrix cauchy_matrix(const Field& f, int rows, int cols,
                          const std::vector<FieldElement>& x,
                          const std::vector<FieldElement>& y) {
    if (rows <= 0 || cols <= 0 || rows > cols)
        throw std::invalid_argument("cauchy_matrix: need 0 < rows <= cols");
    if (static_cast<int>(x.size()) != rows || static_cast<int>(y.size()) != cols)
        throw std::invalid_argument("cauchy_matrix: evaluation point counts must match the shape");
    std::set<std::uint32_t> seen;
    for (FieldElement e : x) seen.insert(e.v);
    for (FieldElement e : y) seen.insert(e.v);
    if (seen.size() != x.size() + y.size())
        throw std::invalid_argument("cauchy_matrix: evaluation points must be distinct and disjoint");
    FieldMatrix out(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.set(i, j, f.inv(f.sub(x[i], y[j])));
    return out;
}

FieldMatrix cauchy_matrix(const Field& f, int rows, int cols) {
    if (rows + cols > static_cast<int>(f.q()))
        throw std::invalid_argument("cauchy_matrix: field too small, need q >= rows + cols");
    std::vector<FieldElement> x, y;
    for (int i = 0; i < rows; ++i) x.push_back(f.element(i));
    for (int j = 0; j < cols; ++j) y.push_back(f.element(rows + j));
    return cauchy_matrix(f, rows, cols, x, y);
}

bool all_minors_nonzero(const FieldMatrix& m, bool full_size_only) {
    int r = m.rows(), c = m.cols();
    int smax = std::min(r, c);
    int smin = full_size_only ? smax : 1;
    std::uint64_t total = 0;
    for (int s = smin; s <= smax; ++s) total += binomial(r, s) * binomial(c, s);
    if (total > 1000000)
        throw OracleTooLargeError("all_minors_nonzero: more than 10^6 minors requested");
    for (int s = smin; s <= smax; ++s) {
        bool ok = true;
        for_each_combination(r, s, [&](const std::vector<int>& rows1) {
            std::vector<int> r0(s);
            for (int i = 0; i < s; ++i) r0[i] = rows1[i] - 1;
            return for_each_combination(c, s, [&](const std::vector<int>& cols1) {
                std::vector<int> c0(s);
                for (int i = 0; i < s; ++i) c0[i] = cols1[i] - 1;
                if (m.submatrix(r0, c0).det().v == 0) {
                    ok = false;
                    return false;
                }
                return true;
            });
        });
        if (!ok) return false;
    }
    return true;
}

CounterexampleL0 counterexample_l0(int n, int k, int delta, const Field& f, Side side) {
    if (k <= 0 || k >= n) throw std::invalid_argument("counterexample_l0: need 0 < k < n");
    if (delta < 1 || delta >= k || delta >= n - k)
        throw std::invalid_argument("counterexample_l0: need 1 <= delta < k and delta < n - k");
    int rows = (side == Side::parity) ? n - k : k;
    FieldMatrix m0 = cauchy_matrix(f, rows, n);
    PolyMatrix m(f, rows, n);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement c = m0.at(i, j);
            m.set(i, j, Poly(f, {c, f.neg(c)}));  // c * (1 - z)
        }
    CounterexampleL0 out{m, check_mdp_criterion(m, side, 0, MinorMode::structural)};
    out.left_prime = is_left_prime(m);
    ConvCode code = (side == Side::parity) ? code_from_parity(m) : code_from_generator(m);
    out.code_degree = code_degree(code);
    out.eval_at_one_zero = m.eval(f.one()).is_zero();
    return out;
}

namespace {

// Candidate rows carry generic degrees: the first `high_rows` rows have degree
// `nu`, the rest degree `nu - 1`. Digits run over (coefficient, column) pairs,
// coefficient index ascending, and encode one matrix row-major.
struct CandidateShape {
    int rows = 0, n = 0;
    std::vector<int> row_degree;
    std::vector<int> row_offset;  // digit offset of each row
    int total_digits = 0;
};

CandidateShape candidate_shape(const CodeParams& p) {
    CandidateShape shape;
    shape.rows = p.n - p.k;
    shape.n = p.n;
    int low_deg = p.delta / (p.n - p.k);
    for (int i = 0; i < shape.rows; ++i) {
        int d = (i < p.t) ? p.nu : low_deg;
        if (d < 0) throw std::invalid_argument("search_mdp: degenerate row degrees");
        shape.row_degree.push_back(d);
        shape.row_offset.push_back(shape.total_digits);
        shape.total_digits += (d + 1) * shape.n;
    }
    return shape;
}

// A row is valid when its top coefficient slice is nonzero; a candidate is
// canonical when each row's first nonzero digit equals 1 (row scaling).
bool candidate_ok(const CandidateShape& shape, const std::vector<std::uint32_t>& digits) {
    for (int i = 0; i < shape.rows; ++i) {
        int off = shape.row_offset[i];
        int d = shape.row_degree[i];
        bool top_nonzero = false;
        for (int col = 0; col < shape.n; ++col)
            if (digits[off + d * shape.n + col] != 0) { top_nonzero = true; break; }
        if (!top_nonzero) return false;
        for (int t = 0; t < (d + 1) * shape.n; ++t) {
            if (digits[off + t] == 0) continue;
            if (digits[off + t] != 1) return false;
            break;
        }
    }
    return true;
}

PolyMatrix candidate_matrix(const Field& f, const CandidateShape& shape,
                            const std::vector<std::uint32_t>& digits) {
    PolyMatrix h(f, shape.rows, shape.n);
    for (int i = 0; i < shape.rows; ++i) {
        int off = shape.row_offset[i];
        int d = shape.row_degree[i];
        for (int col = 0; col < shape.n; ++col) {
            std::vector<FieldElement> cs(d + 1);
            for (int e = 0; e <= d; ++e) cs[e] = FieldElement{digits[off + e * shape.n + col]};
            h.set(i, col, Poly(f, std::move(cs)));
        }
    }
    return h;
}

}  // namespace

SearchResult search_mdp(const SearchConfig& config) {
    CodeParams p = derive_params(config.n, config.k, config.delta);
    const Field& f = config.field;
    CandidateShape shape = candidate_shape(p);
    SearchResult result;
    std::vector<std::pair<std::vector<std::uint32_t>, SearchHit>> found;

    auto consider = [&](const std::vector<std::uint32_t>& digits) {
        if (!candidate_ok(shape, digits)) return;
        PolyMatrix h = candidate_matrix(f, shape, digits);
        CorollaryAudit audit = corollary_audit(h, Side::parity, config.n, config.k, config.delta);
        if (audit.all_pass()) found.emplace_back(digits, SearchHit{std::move(h), std::move(audit)});
    };

    if (config.strategy == SearchConfig::Strategy::exhaustive) {
        std::vector<std::uint32_t> digits(shape.total_digits, 0);
        bool done = false;
        while (!done) {
            if (result.examined >= config.budget) {
                result.truncated = true;
                break;
            }
            ++result.examined;
            consider(digits);
            // lexicographic odometer, most significant digit first
            int pos = shape.total_digits - 1;
            while (pos >= 0 && digits[pos] == f.q() - 1) digits[pos--] = 0;
            if (pos < 0) done = true;
            else ++digits[pos];
        }
    } else {
        std::mt19937_64 rng(config.seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
        result.truncated = (config.budget == 0);
        for (long long s = 0; s < config.budget; ++s) {
            ++result.examined;
            std::vector<std::uint32_t> digits(shape.total_digits);
            for (int i = 0; i < shape.rows; ++i) {
                int off = shape.row_offset[i];
                int d = shape.row_degree[i];
                for (;;) {
                    for (int t = 0; t < (d + 1) * shape.n; ++t) digits[off + t] = dist(rng);
                    bool top = false;
                    for (int col = 0; col < shape.n; ++col)
                        if (digits[off + d * shape.n + col] != 0) { top = true; break; }
                    if (top) break;
                }
                // canonicalize the row up to scaling
                for (int t = 0; t < (d + 1) * shape.n; ++t) {
                    if (digits[off + t] == 0) continue;
                    FieldElement scale = f.inv(FieldElement{digits[off + t]});
                    for (int u = t; u < (d + 1) * shape.n; ++u)
                        digits[off + u] = f.mul(FieldElement{digits[off + u]}, scale).v;
                    break;
                }
            }
            consider(digits);
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                found.end());
    for (auto& [digits, hit] : found) result.hits.push_back(std::move(hit));
    return result;
}

}  // namespace mdpcc
