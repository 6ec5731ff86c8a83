#include "mdpcc/finite_field.hpp"

#include <limits>
#include <stdexcept>

namespace mdpcc {
namespace {

using Vec = std::vector<std::uint32_t>;

int raw_degree(const Vec& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::logic_error("inv_mod_p: not invertible");
    return static_cast<std::uint32_t>(((t % p) + p) % p);
}

// a mod b over GF(p); b nonzero. Coefficients ascending, not normalized.
Vec raw_mod(Vec a, const Vec& b, std::uint32_t p) {
    int db = raw_degree(b);
    std::uint32_t lead_inv = inv_mod_p(b[db], p);
    for (int da = raw_degree(a); da >= db; da = raw_degree(a)) {
        std::uint64_t c = static_cast<std::uint64_t>(a[da]) * lead_inv % p;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
    }
    return a;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Vec f(poly.begin(), poly.end());
    int deg = raw_degree(f);
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t w = 0; w < count; ++w) {
            Vec g(dd + 1, 0);
            std::uint64_t t = w;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (raw_degree(raw_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (m < 1) throw std::invalid_argument("find_irreducible: m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > Field::kMaxFieldSize)
            throw std::invalid_argument("find_irreducible: field size cap q <= 2^16 exceeded");
    }
    for (std::uint64_t v = 0; v < q; ++v) {
        Vec cand(m + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        cand[m] = 1;
        if (is_irreducible(p, cand)) return cand;
    }
    throw std::logic_error("find_irreducible: no irreducible found");
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) q *= p_;
    q_ = static_cast<std::uint32_t>(q);
}

Field Field::prime(std::uint32_t p) {
    return with_modulus(p, {0, 1});
}

Field Field::extension(std::uint32_t p, std::uint32_t m) {
    return with_modulus(p, find_irreducible(p, m));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (modulus.size() < 2) throw std::invalid_argument("Field: modulus must have degree >= 1");
    std::uint32_t m = static_cast<std::uint32_t>(modulus.size()) - 1;
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("Field: modulus coefficients must lie in [0, p)");
    if (modulus[m] != 1) throw std::invalid_argument("Field: modulus must be monic");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw std::invalid_argument("Field: field size cap q <= 2^16 exceeded");
    }
    if (m > 1 && !is_irreducible(p, modulus))
        throw std::invalid_argument("Field: modulus is reducible over GF(p)");
    return Field(p, m, std::move(modulus));
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= q_) throw std::invalid_argument("Field: element index out of range");
    return {static_cast<std::uint32_t>(index)};
}

FieldElement Field::from_int(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> rep) const {
    if (rep.size() != m_) throw std::invalid_argument("Field: coefficient vector must have length m");
    std::uint64_t v = 0;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (rep[i] >= p_) throw std::invalid_argument("Field: coefficient out of range");
        v += rep[i] * base;
        base *= p_;
    }
    return {static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
    std::vector<std::uint32_t> out(m_, 0);
    std::uint32_t v = a.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (m_ == 1) return {(a.v + b.v) % p_};
    std::uint32_t out = 0, base = 1;
    std::uint32_t av = a.v, bv = b.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((av % p_ + bv % p_) % p_) * base;
        av /= p_;
        bv /= p_;
        base *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    if (m_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    std::uint32_t out = 0, base = 1;
    std::uint32_t av = a.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = av % p_;
        out += (d == 0 ? 0 : p_ - d) * base;
        av /= p_;
        base *= p_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.v == 0 || b.v == 0) return {0};
    if (m_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    auto da = coeffs(a);
    auto db = coeffs(b);
    std::vector<std::uint64_t> c(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) c[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // reduce modulo the monic modulus: z^m = -(modulus_0 + ... + modulus_{m-1} z^{m-1})
    for (int i = static_cast<int>(c.size()) - 1; i >= static_cast<int>(m_); --i) {
        std::uint64_t ci = c[i] % p_;
        c[i] = 0;
        if (ci == 0) continue;
        for (std::uint32_t t = 0; t < m_; ++t)
            c[i - m_ + t] += ci * ((p_ - modulus_[t]) % p_);
    }
    std::vector<std::uint32_t> rep(m_);
    for (std::uint32_t i = 0; i < m_; ++i) rep[i] = static_cast<std::uint32_t>(c[i] % p_);
    return from_coeffs(rep);
}

FieldElement Field::inv(FieldElement a) const {
    if (a.v == 0)
        throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FieldElement acc = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string Field::to_string(FieldElement a) const {
    if (m_ == 1) return std::to_string(a.v);
    auto rep = coeffs(a);
    std::string out = "(";
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (i) out += ",";
        out += std::to_string(rep[i]);
    }
    out += ")";
    return out;
}

}  // namespace mdpcc
