#include "mdpcc/poly.hpp"

#include <stdexcept>

namespace mdpcc {
namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("polynomial operands live in different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (FieldElement c : coeffs_)
        if (c.v >= field_.q()) throw std::invalid_argument("Poly: coefficient outside the field");
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Field& f, FieldElement c, int deg) {
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<FieldElement> cs(deg + 1, f.zero());
    cs[deg] = c;
    return Poly(f, std::move(cs));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<std::int64_t> cs) {
    std::vector<FieldElement> out;
    out.reserve(cs.size());
    for (std::int64_t c : cs) out.push_back(f.from_int(c));
    return Poly(f, std::move(out));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[i];
}

FieldElement Poly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading_coeff of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    std::vector<FieldElement> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.neg(coeffs_[i]);
    return Poly(field_, std::move(out));
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (is_zero()) return *this;
    std::vector<FieldElement> out(coeffs_.size() + k, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(FieldElement c) const {
    std::vector<FieldElement> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
    return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coeff()));
}

FieldElement Poly::eval(FieldElement x) const {
    FieldElement acc = field_.zero();
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].v == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(f, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field() == b.field() && a.coeffs_ == b.coeffs_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const Field& f = a.field();
    if (a.is_zero() || a.degree() < b.degree()) return {Poly::zero(f), a};
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElement> quot(a.degree() - b.degree() + 1, f.zero());
    FieldElement lead_inv = f.inv(b.leading_coeff());
    int db = b.degree();
    for (int dr = static_cast<int>(rem.size()) - 1; dr >= db; --dr) {
        if (rem[dr].v == 0) continue;
        FieldElement c = f.mul(rem[dr], lead_inv);
        quot[dr - db] = c;
        for (int i = 0; i <= db; ++i)
            rem[dr - db + i] = f.sub(rem[dr - db + i], f.mul(c, b.coeff(i)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field& fd = f.field();
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(i);
        if (c.v == 0) continue;
        if (!out.empty()) out += "+";
        bool unit = (c == fd.one());
        if (i == 0 || !unit || fd.m() > 1) out += fd.to_string(c);
        if (i > 0) {
            if (!unit || fd.m() > 1) out += "*";
            out += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace mdpcc
