#include "mdpcc/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdpcc/combinatorics.hpp"

namespace mdpcc {
namespace {

void require_same_field(const PolyMatrix& a, const PolyMatrix& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("matrix operands live in different fields");
}

void require_index_set(std::span<const int> set, int limit, const char* what) {
    int prev = 0;
    for (int t : set) {
        if (t <= prev)
            throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing and 1-based");
        if (t > limit) throw std::invalid_argument(std::string(what) + ": index out of range");
        prev = t;
    }
}

}  // namespace

PolyMatrix::PolyMatrix(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    e_.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows * cols; ++i) e_.push_back(Poly::zero(field_));
}

PolyMatrix PolyMatrix::identity(const Field& f, int n) {
    PolyMatrix out(f, n, n);
    for (int i = 0; i < n; ++i) out.set(i, i, Poly::one(f));
    return out;
}

PolyMatrix PolyMatrix::from_scalar(const FieldMatrix& m) {
    PolyMatrix out(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).v != 0) out.set(i, j, Poly::constant(m.field(), m.at(i, j)));
    return out;
}

void PolyMatrix::set(int i, int j, Poly p) {
    if (!(p.field() == field_)) throw std::invalid_argument("PolyMatrix: entry field mismatch");
    e_[static_cast<size_t>(i) * cols_ + j] = std::move(p);
}

bool PolyMatrix::is_zero() const {
    for (const Poly& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

int PolyMatrix::degree() const {
    int d = kZeroPolyDegree;
    for (const Poly& p : e_)
        if (!p.is_zero()) d = std::max(d, p.degree());
    return d;
}

int PolyMatrix::row_degree(int i) const {
    int d = kZeroPolyDegree;
    for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) d = std::max(d, at(i, j).degree());
    return d;
}

FieldMatrix PolyMatrix::coefficient_slice(int i) const {
    if (i < 0) throw std::invalid_argument("coefficient_slice: negative index");
    FieldMatrix out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).coeff(i));
    return out;
}

FieldMatrix PolyMatrix::eval(FieldElement x) const {
    FieldMatrix out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).eval(x));
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

PolyMatrix PolyMatrix::submatrix(std::span<const int> rows0, std::span<const int> cols0) const {
    PolyMatrix out(field_, static_cast<int>(rows0.size()), static_cast<int>(cols0.size()));
    for (size_t i = 0; i < rows0.size(); ++i) {
        if (rows0[i] < 0 || rows0[i] >= rows_) throw std::invalid_argument("submatrix: row out of range");
        for (size_t j = 0; j < cols0.size(); ++j) {
            if (cols0[j] < 0 || cols0[j] >= cols_) throw std::invalid_argument("submatrix: column out of range");
            out.set(static_cast<int>(i), static_cast<int>(j), at(rows0[i], cols0[j]));
        }
    }
    return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
    PolyMatrix out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * c);
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    PolyMatrix out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t) {
            const Poly& av = a.at(i, t);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(t, j).is_zero()) continue;
                out.set(i, j, out.at(i, j) + av * b.at(t, j));
            }
        }
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    PolyMatrix out(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    PolyMatrix out(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

Poly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
    const Field& f = m.field();
    int n = m.rows();
    if (n == 0) return Poly::one(f);
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(f);
    std::vector<int> rows0(n - 1), cols0;
    for (int i = 1; i < n; ++i) rows0[i - 1] = i;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        cols0.clear();
        for (int c = 0; c < n; ++c)
            if (c != j) cols0.push_back(c);
        Poly term = m.at(0, j) * det_cofactor(m.submatrix(rows0, cols0));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Poly det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
    const Field& f = m.field();
    int n = m.rows();
    if (n == 0) return Poly::one(f);
    PolyMatrix a = m;
    bool negate = false;
    Poly prev = Poly::one(f);
    for (int k = 0; k + 1 < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!a.at(i, k).is_zero()) { p = i; break; }
        if (p < 0) return Poly::zero(f);
        if (p != k) {
            for (int j = 0; j < n; ++j) {
                Poly t = a.at(p, j);
                a.set(p, j, a.at(k, j));
                a.set(k, j, t);
            }
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.set(i, j, exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev));
            a.set(i, k, Poly::zero(f));
        }
        prev = a.at(k, k);
    }
    Poly d = a.at(n - 1, n - 1);
    return negate ? -d : d;
}

Poly determinant(const PolyMatrix& m) {
    return m.rows() <= 6 ? det_cofactor(m) : det_fraction_free(m);
}

Poly minor_poly(const PolyMatrix& m, std::span<const int> row_set, std::span<const int> col_set) {
    if (row_set.size() != col_set.size())
        throw std::invalid_argument("minor: row and column sets must have equal size");
    require_index_set(row_set, m.rows(), "minor rows");
    require_index_set(col_set, m.cols(), "minor cols");
    std::vector<int> r0(row_set.size()), c0(col_set.size());
    for (size_t i = 0; i < row_set.size(); ++i) r0[i] = row_set[i] - 1;
    for (size_t j = 0; j < col_set.size(); ++j) c0[j] = col_set[j] - 1;
    return determinant(m.submatrix(r0, c0));
}

int rank_rational(const PolyMatrix& m) {
    const Field& f = m.field();
    PolyMatrix a = m;
    int r = m.rows(), c = m.cols();
    Poly prev = Poly::one(f);
    int rank = 0;
    for (int step = 0; step < std::min(r, c); ++step) {
        int pi = -1, pj = -1;
        for (int i = step; i < r && pi < 0; ++i)
            for (int j = step; j < c; ++j)
                if (!a.at(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != step)
            for (int j = 0; j < c; ++j) {
                Poly t = a.at(pi, j);
                a.set(pi, j, a.at(step, j));
                a.set(step, j, t);
            }
        if (pj != step)
            for (int i = 0; i < r; ++i) {
                Poly t = a.at(i, pj);
                a.set(i, pj, a.at(i, step));
                a.set(i, step, t);
            }
        ++rank;
        for (int i = step + 1; i < r; ++i) {
            for (int j = step + 1; j < c; ++j)
                a.set(i, j, exact_div(a.at(step, step) * a.at(i, j) - a.at(i, step) * a.at(step, j), prev));
            a.set(i, step, Poly::zero(f));
        }
        prev = a.at(step, step);
    }
    return rank;
}

int row_degree_sum(const PolyMatrix& m) {
    int sum = 0;
    for (int i = 0; i < m.rows(); ++i) {
        int d = m.row_degree(i);
        if (d == kZeroPolyDegree) throw RankDeficientError("row degree sum: zero row");
        sum += d;
    }
    return sum;
}

int max_full_minor_degree(const PolyMatrix& m) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("max_full_minor_degree: matrix must have rows <= cols");
    int best = kZeroPolyDegree;
    for_each_combination(m.cols(), m.rows(), [&](const std::vector<int>& cols1) {
        std::vector<int> rows1(m.rows());
        for (int i = 0; i < m.rows(); ++i) rows1[i] = i + 1;
        Poly d = minor_poly(m, rows1, cols1);
        if (!d.is_zero()) best = std::max(best, d.degree());
        return true;
    });
    if (best == kZeroPolyDegree)
        throw RankDeficientError("max_full_minor_degree: all full-size minors vanish");
    return best;
}

namespace {

// Elementary-operation Smith reduction keeping U * D * V == M and the inverse
// transforms in sync.
struct SmithWork {
    PolyMatrix D, U, Uinv, V, Vinv;

    explicit SmithWork(const PolyMatrix& m)
        : D(m),
          U(PolyMatrix::identity(m.field(), m.rows())),
          Uinv(PolyMatrix::identity(m.field(), m.rows())),
          V(PolyMatrix::identity(m.field(), m.cols())),
          Vinv(PolyMatrix::identity(m.field(), m.cols())) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < D.cols(); ++c) {
            Poly t = D.at(i, c); D.set(i, c, D.at(j, c)); D.set(j, c, t);
        }
        for (int r = 0; r < U.rows(); ++r) {
            Poly t = U.at(r, i); U.set(r, i, U.at(r, j)); U.set(r, j, t);
        }
        for (int c = 0; c < Uinv.cols(); ++c) {
            Poly t = Uinv.at(i, c); Uinv.set(i, c, Uinv.at(j, c)); Uinv.set(j, c, t);
        }
    }

    // D: row dst += q * row src
    void row_addmul(int dst, int src, const Poly& q) {
        for (int c = 0; c < D.cols(); ++c) D.set(dst, c, D.at(dst, c) + q * D.at(src, c));
        for (int r = 0; r < U.rows(); ++r) U.set(r, src, U.at(r, src) - q * U.at(r, dst));
        for (int c = 0; c < Uinv.cols(); ++c) Uinv.set(dst, c, Uinv.at(dst, c) + q * Uinv.at(src, c));
    }

    void row_scale(int i, FieldElement c) {
        const Field& f = D.field();
        Poly cs = Poly::constant(f, c);
        Poly cinv = Poly::constant(f, f.inv(c));
        for (int col = 0; col < D.cols(); ++col) D.set(i, col, D.at(i, col) * cs);
        for (int r = 0; r < U.rows(); ++r) U.set(r, i, U.at(r, i) * cinv);
        for (int col = 0; col < Uinv.cols(); ++col) Uinv.set(i, col, Uinv.at(i, col) * cs);
    }

    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < D.rows(); ++r) {
            Poly t = D.at(r, i); D.set(r, i, D.at(r, j)); D.set(r, j, t);
        }
        for (int c = 0; c < V.cols(); ++c) {
            Poly t = V.at(i, c); V.set(i, c, V.at(j, c)); V.set(j, c, t);
        }
        for (int r = 0; r < Vinv.rows(); ++r) {
            Poly t = Vinv.at(r, i); Vinv.set(r, i, Vinv.at(r, j)); Vinv.set(r, j, t);
        }
    }

    // D: col dst += q * col src
    void col_addmul(int dst, int src, const Poly& q) {
        for (int r = 0; r < D.rows(); ++r) D.set(r, dst, D.at(r, dst) + q * D.at(r, src));
        for (int c = 0; c < V.cols(); ++c) V.set(src, c, V.at(src, c) - q * V.at(dst, c));
        for (int r = 0; r < Vinv.rows(); ++r) Vinv.set(r, dst, Vinv.at(r, dst) + q * Vinv.at(r, src));
    }
};

}  // namespace

SmithDecomposition smith(const PolyMatrix& m) {
    const Field& f = m.field();
    SmithWork w(m);
    int r = m.rows(), c = m.cols();
    int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // minimal-degree nonzero pivot in the remaining block
            int pi = -1, pj = -1, best = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    const Poly& e = w.D.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { t = steps; break; }  // remaining block is zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);
            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (w.D.at(i, t).is_zero()) continue;
                auto [q, rem] = divmod(w.D.at(i, t), w.D.at(t, t));
                w.row_addmul(i, t, -q);
                if (!rem.is_zero()) dirty = true;
            }
            for (int j = t + 1; j < c; ++j) {
                if (w.D.at(t, j).is_zero()) continue;
                auto [q, rem] = divmod(w.D.at(t, j), w.D.at(t, t));
                w.col_addmul(j, t, -q);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;
            // the cross is clear; the pivot must divide everything that remains
            bool offending = false;
            for (int i = t + 1; i < r && !offending; ++i)
                for (int j = t + 1; j < c; ++j) {
                    if (w.D.at(i, j).is_zero()) continue;
                    if (!divmod(w.D.at(i, j), w.D.at(t, t)).second.is_zero()) {
                        w.row_addmul(t, i, Poly::one(f));
                        offending = true;
                        break;
                    }
                }
            if (!offending) break;
        }
        if (t >= steps) break;
    }
    // monic normalization
    for (int t = 0; t < steps; ++t)
        if (!w.D.at(t, t).is_zero() && !(w.D.at(t, t).leading_coeff() == f.one()))
            w.row_scale(t, f.inv(w.D.at(t, t).leading_coeff()));

    SmithDecomposition out{w.U, w.D, w.V, {}, w.Uinv, w.Vinv};
    for (int t = 0; t < steps; ++t) out.factors.push_back(w.D.at(t, t));
    if (!(out.U * out.D * out.V == m)) throw std::logic_error("smith: reconstruction mismatch");
    if (!(out.U * out.U_inv == PolyMatrix::identity(f, r)) ||
        !(out.V_inv * out.V == PolyMatrix::identity(f, c)))
        throw std::logic_error("smith: inverse transform mismatch");
    for (size_t i = 0; i + 1 < out.factors.size(); ++i) {
        if (out.factors[i].is_zero()) {
            if (!out.factors[i + 1].is_zero()) throw std::logic_error("smith: zero factor ordering");
            continue;
        }
        if (!divmod(out.factors[i + 1], out.factors[i]).second.is_zero())
            throw std::logic_error("smith: divisibility chain broken");
    }
    return out;
}

bool is_left_prime(const PolyMatrix& m, LeftPrimeMethod method) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("is_left_prime: matrix must have rows <= cols");
    switch (method) {
        case LeftPrimeMethod::minor_gcd: {
            Poly g = Poly::zero(m.field());
            std::vector<int> rows1(m.rows());
            for (int i = 0; i < m.rows(); ++i) rows1[i] = i + 1;
            for_each_combination(m.cols(), m.rows(), [&](const std::vector<int>& cols1) {
                g = poly_gcd(g, minor_poly(m, rows1, cols1));
                return !(g.degree() == 0);  // a constant gcd cannot change any more
            });
            if (g.is_zero()) throw RankDeficientError("is_left_prime: deficient rational row rank");
            return g.degree() == 0;
        }
        case LeftPrimeMethod::smith: {
            SmithDecomposition s = smith(m);
            int nonzero = 0;
            bool all_const = true;
            for (const Poly& d : s.factors) {
                if (d.is_zero()) continue;
                ++nonzero;
                if (d.degree() != 0) all_const = false;
            }
            if (nonzero < m.rows()) throw RankDeficientError("is_left_prime: deficient rational row rank");
            return all_const;
        }
        case LeftPrimeMethod::right_inverse: {
            if (rank_rational(m) < m.rows())
                throw RankDeficientError("is_left_prime: deficient rational row rank");
            int d = m.is_zero() ? 0 : std::max(m.degree(), 0);
            return right_inverse(m, m.rows() * d).has_value();
        }
    }
    throw std::logic_error("is_left_prime: unknown method");
}

std::optional<PolyMatrix> solve_right(const PolyMatrix& a, const PolyMatrix& b, int max_deg) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row mismatch");
    if (max_deg < 0) throw std::invalid_argument("solve_right: negative degree bound");
    const Field& f = a.field();
    int r = a.rows(), c = a.cols(), w = b.cols();
    int da = a.is_zero() ? 0 : std::max(a.degree(), 0);
    int db = b.is_zero() ? 0 : std::max(b.degree(), 0);
    std::vector<FieldMatrix> aslice, bslice;
    for (int i = 0; i <= da; ++i) aslice.push_back(a.coefficient_slice(i));
    for (int i = 0; i <= db; ++i) bslice.push_back(b.coefficient_slice(i));

    for (int d = 0; d <= max_deg; ++d) {
        int emax = std::max(da + d, db);
        FieldMatrix sys(f, r * (emax + 1), c * (d + 1));
        FieldMatrix rhs(f, r * (emax + 1), w);
        for (int e = 0; e <= emax; ++e) {
            for (int t = 0; t <= d; ++t) {
                int s = e - t;
                if (s < 0 || s > da) continue;
                for (int i = 0; i < r; ++i)
                    for (int l = 0; l < c; ++l) sys.set(e * r + i, t * c + l, aslice[s].at(i, l));
            }
            if (e <= db)
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < w; ++j) rhs.set(e * r + i, j, bslice[e].at(i, j));
        }
        std::optional<FieldMatrix> sol = sys.solve(rhs);
        if (!sol) continue;
        PolyMatrix x(f, c, w);
        for (int l = 0; l < c; ++l)
            for (int j = 0; j < w; ++j) {
                std::vector<FieldElement> cs(d + 1, f.zero());
                for (int t = 0; t <= d; ++t) cs[t] = sol->at(t * c + l, j);
                x.set(l, j, Poly(f, std::move(cs)));
            }
        if (!(a * x == b)) throw std::logic_error("solve_right: solution failed exact verification");
        return x;
    }
    return std::nullopt;
}

std::optional<PolyMatrix> right_inverse(const PolyMatrix& m, int max_deg) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("right_inverse: matrix must have rows <= cols");
    return solve_right(m, PolyMatrix::identity(m.field(), m.rows()), max_deg);
}

LeftPrimeFactorization left_prime_factorization(const PolyMatrix& m) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("left_prime_factorization: matrix must have rows <= cols");
    SmithDecomposition s = smith(m);
    for (const Poly& d : s.factors)
        if (d.is_zero())
            throw RankDeficientError("left_prime_factorization: deficient rational row rank");
    const Field& f = m.field();
    int r = m.rows();
    // P = top r rows of V; F = U * diag(factors)
    std::vector<int> rows0(r), all_cols(m.cols());
    for (int i = 0; i < r; ++i) rows0[i] = i;
    for (int j = 0; j < m.cols(); ++j) all_cols[j] = j;
    PolyMatrix p = s.V.submatrix(rows0, all_cols);
    PolyMatrix diag(f, r, r);
    for (int i = 0; i < r; ++i) diag.set(i, i, s.factors[i]);
    PolyMatrix fmat = s.U * diag;
    if (!(fmat * p == m)) throw std::logic_error("left_prime_factorization: product mismatch");
    return {fmat, p};
}

FieldMatrix leading_row_matrix(const PolyMatrix& m) {
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        int d = m.row_degree(i);
        if (d == kZeroPolyDegree) throw RankDeficientError("leading_row_matrix: zero row");
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j).coeff(d));
    }
    return out;
}

bool is_row_reduced(const PolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (m.row_degree(i) == kZeroPolyDegree) return false;
    return leading_row_matrix(m).rank() == m.rows();
}

RowReducedForm row_reduce(const PolyMatrix& m) {
    const Field& f = m.field();
    PolyMatrix r = m;
    PolyMatrix u = PolyMatrix::identity(f, m.rows());
    for (;;) {
        for (int i = 0; i < r.rows(); ++i)
            if (r.row_degree(i) == kZeroPolyDegree)
                throw RankDeficientError("row_reduce: input does not have full row rank");
        FieldMatrix lead = leading_row_matrix(r);
        FieldMatrix kernel = lead.transpose().nullspace();  // left kernel vectors
        if (kernel.cols() == 0) break;
        // cancel the leading terms of the highest-degree row involved
        std::vector<int> degs(r.rows());
        for (int i = 0; i < r.rows(); ++i) degs[i] = r.row_degree(i);
        int pivot = -1, dmax = -1;
        for (int i = 0; i < r.rows(); ++i)
            if (kernel.at(i, 0).v != 0 && degs[i] > dmax) { dmax = degs[i]; pivot = i; }
        std::vector<Poly> new_row(r.cols(), Poly::zero(f));
        std::vector<Poly> new_urow(u.cols(), Poly::zero(f));
        for (int i = 0; i < r.rows(); ++i) {
            FieldElement wi = kernel.at(i, 0);
            if (wi.v == 0) continue;
            Poly factor = Poly::monomial(f, wi, dmax - degs[i]);
            for (int j = 0; j < r.cols(); ++j) new_row[j] = new_row[j] + factor * r.at(i, j);
            for (int j = 0; j < u.cols(); ++j) new_urow[j] = new_urow[j] + factor * u.at(i, j);
        }
        for (int j = 0; j < r.cols(); ++j) r.set(pivot, j, new_row[j]);
        for (int j = 0; j < u.cols(); ++j) u.set(pivot, j, new_urow[j]);
    }
    RowReducedForm out{u, r, {}, leading_row_matrix(r)};
    for (int i = 0; i < r.rows(); ++i) out.row_degrees.push_back(r.row_degree(i));
    if (!(u * m == r)) throw std::logic_error("row_reduce: transform mismatch");
    return out;
}

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Poly d = determinant(m);
    return !d.is_zero() && d.degree() == 0;
}

std::optional<PolyMatrix> row_equivalence_witness(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    int db = b.is_zero() ? 0 : std::max(b.degree(), 0);
    std::optional<PolyMatrix> binv = right_inverse(b, b.rows() * db);
    if (!binv) return std::nullopt;  // b is not left prime
    PolyMatrix w = a * (*binv);
    if (!(w * b == a)) return std::nullopt;
    if (!is_unimodular(w)) return std::nullopt;
    return w;
}

}  // namespace mdpcc
